"""Logging utility for strongce (console plus optional JSON file logging)"""
import logging
import json
import os
from datetime import datetime

from strongce.config import get_settings


class JsonFormatter(logging.Formatter):
    """Formats logs as JSON objects"""
    def format(self, record):
        log_record = {
            "timestamp": datetime.now().strftime("%Y-%m-%d %H:%M:%S"),
            "logger": record.name,
            "level": record.levelname,
            "message": record.getMessage()
        }
        context = getattr(record, "context", None)
        if context is not None:
            log_record["context"] = context
        return json.dumps(log_record, ensure_ascii=False, default=str)


def get_logger(name: str = "strongce") -> logging.Logger:
    """Get a configured logger instance"""
    logger = logging.getLogger(name)

    # Prevent duplicates if already configured
    if logger.handlers:
        return logger

    settings = get_settings()
    logger.setLevel(getattr(logging, settings.log_level, logging.INFO))

    # ---------------------
    # 1. Console Handler
    # ---------------------
    console_handler = logging.StreamHandler()
    console_formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )
    console_handler.setFormatter(console_formatter)
    logger.addHandler(console_handler)

    # ---------------------
    # 2. JSON File Handler (only when a log file is configured)
    # ---------------------
    log_file = settings.log_file
    if log_file:
        log_dir = os.path.dirname(log_file)
        if log_dir:
            os.makedirs(log_dir, exist_ok=True)
        file_handler = logging.FileHandler(log_file, encoding="utf-8")
        file_handler.setFormatter(JsonFormatter())
        logger.addHandler(file_handler)

    return logger
