import os
import logging
from pathlib import Path
from dotenv import load_dotenv

from src.utils.config import ENV_PREFIX, get_settings

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

logger = logging.getLogger("InitUtil")

def init_application():
    """
    Initialize the application: load .env, read settings and configure logging.

    Returns:
        bool: True if initialization succeeded, False otherwise
    """
    try:
        # Load environment variables
        load_dotenv()
        get_settings.cache_clear()
        settings = get_settings()

        handlers = [logging.StreamHandler()]
        if settings.log_file:
            log_dir = os.path.dirname(os.path.abspath(settings.log_file))
            os.makedirs(log_dir, exist_ok=True)
            handlers.append(logging.FileHandler(settings.log_file))

        logging.basicConfig(level=settings.log_level, format=LOG_FORMAT, handlers=handlers, force=True)
        logger.info(f"Logging initialized at level {settings.log_level}"
                    + (f", log file {settings.log_file}" if settings.log_file else ""))
        return True

    except Exception as e:
        logger.error(f"Error during application initialization: {e}")
        return False

def create_example_env_file():
    """
    Create an example .env file if one doesn't exist.
    This lists the settings the library reads from the environment.
    """
    env_path = Path(".env")
    example_env_path = Path(".env.example")

    # Don't overwrite existing .env file
    if env_path.exists():
        logger.info(".env file already exists, skipping creation of example")
        return

    example_content = f"""# Logging
{ENV_PREFIX}LOG_LEVEL=WARNING
# {ENV_PREFIX}LOG_FILE=logs/core_motzkin.log

# Brute-force oracle
{ENV_PREFIX}WORKERS=1
{ENV_PREFIX}MAX_PATH_LENGTH=24
{ENV_PREFIX}MAX_CORE_MODULUS=16
"""

    with open(example_env_path, "w") as f:
        f.write(example_content)

    logger.info(f"Created {example_env_path} file. Rename it to .env to change the defaults.")

if __name__ == "__main__":
    success = init_application()
    create_example_env_file()

    if success:
        print("Application initialization completed successfully.")
    else:
        print("Application initialization failed. See logs for details.")
