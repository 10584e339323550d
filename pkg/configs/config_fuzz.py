from dotenv import load_dotenv
import os

load_dotenv()

# Fuzzing defaults
class FuzzDefault:
    TRIALS = int(os.getenv("EPIKIT_FUZZ_TRIALS", "500"))
    SEED = int(os.getenv("EPIKIT_FUZZ_SEED", "0"))
    MAX_WORLDS = int(os.getenv("EPIKIT_FUZZ_MAX_WORLDS", "6"))
    AGENTS = int(os.getenv("EPIKIT_FUZZ_AGENTS", "2"))
    PROPS = int(os.getenv("EPIKIT_FUZZ_PROPS", "2"))
    ACTIONS = int(os.getenv("EPIKIT_FUZZ_ACTIONS", "2"))
    FORMULA_DEPTH = int(os.getenv("EPIKIT_FUZZ_FORMULA_DEPTH", "3"))

# Recursion budget of the reduction translation
class TranslationLimit:
    FUEL = int(os.getenv("EPIKIT_TRANSLATION_FUEL", "1000000"))
