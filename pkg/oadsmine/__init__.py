"""This is the main oadsmine module: mining open-access data and software links from scholarly text."""
