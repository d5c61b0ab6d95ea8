#!/usr/bin/env python3
"""
Pointless curves over F_q(x)
Main entry point: `python main.py <command> [options]`, see `python main.py --help`
"""

import sys
import logging
from pathlib import Path

from config import Config
from src.cli.commands import cli


def setup_logging():
    """Set up logging configuration; reports own stdout, logs go to stderr"""
    handlers = [logging.StreamHandler(sys.stderr)]
    if Config.LOG_TO_FILE:
        log_dir = Path(Config.LOGS_DIR)
        log_dir.mkdir(exist_ok=True)
        handlers.append(logging.FileHandler(log_dir / 'pointless.log'))

    logging.basicConfig(
        level=logging.INFO,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers
    )


def main():
    setup_logging()
    applied = Config.load_overrides()
    if applied:
        logging.getLogger(__name__).info(f"Configuration overrides: {applied}")
    cli(obj={})


if __name__ == "__main__":
    main()
