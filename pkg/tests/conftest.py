import sys
from pathlib import Path

# Make the suite runnable straight from a checkout, installed or not.
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))
sys.path.insert(0, str(Path(__file__).parent))
