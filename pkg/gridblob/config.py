"""
Configuration constants and settings for gridblob
"""
import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables from .env file
env_path = Path(__file__).parent.parent / '.env'
load_dotenv(dotenv_path=env_path)


class Config:
    """Configuration constants"""
    # Exact search limits
    ORACLE_NODE_BUDGET = int(os.getenv('GRIDBLOB_ORACLE_NODE_BUDGET', '2000000'))
    ORACLE_MAX_VERTICES = int(os.getenv('GRIDBLOB_ORACLE_MAX_VERTICES', '5'))
    UNIT_DRAWING_MAX_VERTICES = int(os.getenv('GRIDBLOB_UNIT_DRAWING_MAX_VERTICES', '8'))
    EXACT_TD_MAX_VERTICES = int(os.getenv('GRIDBLOB_EXACT_TD_MAX_VERTICES', '10'))

    # Layout settings
    LAYOUT_SEPARATION = int(os.getenv('GRIDBLOB_LAYOUT_SEPARATION', '4'))
    COMPONENT_GAP = int(os.getenv('GRIDBLOB_COMPONENT_GAP', '4'))
    NICE_NODE_FACTOR = int(os.getenv('GRIDBLOB_NICE_NODE_FACTOR', '4'))

    # Export settings
    SVG_CELL_SIZE = int(os.getenv('GRIDBLOB_SVG_CELL_SIZE', '10'))

    # Logging / debug settings
    LOG_LEVEL = os.getenv('GRIDBLOB_LOG_LEVEL', 'INFO').upper()
    DEBUG = os.getenv('GRIDBLOB_DEBUG', 'false').lower() == 'true'

    # Oracle grid caps: (max cells per axis, max blob cap) per dimension
    ORACLE_GRID_LIMITS = {
        2: (4, 4),
        3: (3, 4),
    }
    UNIT_DRAWING_GRID_LIMIT = 5

    @classmethod
    def reload_env(cls):
        """Re-read the tunable settings after the environment changed"""
        load_dotenv(dotenv_path=env_path, override=True)
        cls.ORACLE_NODE_BUDGET = int(os.getenv('GRIDBLOB_ORACLE_NODE_BUDGET', '2000000'))
        cls.LAYOUT_SEPARATION = int(os.getenv('GRIDBLOB_LAYOUT_SEPARATION', '4'))
        cls.COMPONENT_GAP = int(os.getenv('GRIDBLOB_COMPONENT_GAP', '4'))
        cls.LOG_LEVEL = os.getenv('GRIDBLOB_LOG_LEVEL', 'INFO').upper()
        cls.DEBUG = os.getenv('GRIDBLOB_DEBUG', 'false').lower() == 'true'

    @classmethod
    def log_level(cls) -> str:
        """Effective logging level name"""
        return 'DEBUG' if cls.DEBUG else cls.LOG_LEVEL

