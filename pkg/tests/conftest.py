import sys
from pathlib import Path

# make `import helpers` work regardless of pytest's import mode
sys.path.insert(0, str(Path(__file__).parent))
