# Identifiers start with a letter; letters, digits and underscore follow. `K_` and `Khat_` prefixes are reserved for the knowledge operators, `xi` for indistinguishability atoms.
class Pattern:
    IDENTIFIER_PATTERN = r"(?!K_|Khat_)[A-Za-z][A-Za-z0-9_]*"
    RESERVED_WORDS = ("xi",)

class Limit:
    MAX_WORLDS = 4096
    MAX_ACTIONS = 256
