from loguru import logger

# Библиотека молчит, пока приложение не вызовет setup_logger
logger.disable('src')
