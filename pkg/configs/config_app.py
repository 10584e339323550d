from pathlib import Path
from dotenv import load_dotenv
import os

load_dotenv()

LOG_LEVEL = os.getenv("EPIKIT_LOG_LEVEL", "WARNING")
# EPIKIT_DEBUG=1 logs at DEBUG level, like --verbose
DEBUG = os.getenv("EPIKIT_DEBUG", "") == "1"

# Max number of memoized truth sets per evaluation context
EVAL_CACHE_SIZE = int(os.getenv("EPIKIT_EVAL_CACHE_SIZE", "4096"))

FIXTURES_PATH = Path(os.getenv("EPIKIT_FIXTURES_PATH", Path(__file__).resolve().parents[1] / "scenarios" / "fixtures"))
