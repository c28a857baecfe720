"""This module provides utility functions used during application initialization."""

# standard modules
import os
import sys
import copy
import json
import logging

# self-defined modules
from oadsmine.shared.errors import ConfigError


# environment overrides look like OADSMINE_<SECTION>_<KEY>, e.g. OADSMINE_RUN_WORKERS=8
ENV_PREFIX = "OADSMINE_"


def load_json_file(filename):
    if not os.path.isfile(filename):
        raise ConfigError("Configuration file {} not found.".format(filename))
    with open(filename, encoding="utf-8") as config_file:
        try:
            return json.load(config_file)
        except ValueError:
            raise ConfigError("JSON configuration file error in {}. "
                              "Please check for typos in config file.".format(filename))


def template_config():
    """the default configuration shipped next to this module"""
    config_path = os.path.split(__file__)[0]
    template_file = os.path.join(config_path, "config_json.tmpl")
    if not os.path.isfile(template_file):
        raise ConfigError("Configuration template not found. Aborting.")
    return load_json_file(template_file)


def merge_config(base, update):
    """merge update into a copy of base; nested sections are merged key by key"""
    merged = copy.deepcopy(base)
    for key, value in update.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = merge_config(merged[key], value)
        else:
            merged[key] = copy.deepcopy(value)
    return merged


def env_overrides(config, environ=None):
    """collect OADSMINE_<SECTION>_<KEY> variables for sections and keys that exist"""
    environ = os.environ if environ is None else environ
    overrides = {}
    for name, raw_value in environ.items():
        if not name.startswith(ENV_PREFIX):
            continue
        rest = name[len(ENV_PREFIX):]
        for section in config:
            if not rest.startswith(section + "_"):
                continue
            key = rest[len(section) + 1:].lower()
            if key not in config[section]:
                logging.getLogger().warning("Ignoring unknown environment override {}".format(name))
                break
            # JSON literals are parsed, anything else is kept as a string
            try:
                value = json.loads(raw_value)
            except ValueError:
                value = raw_value
            overrides.setdefault(section, {})[key] = value
            break
    return overrides


def typed_value(config, section, key, kind):
    """config[section][key] as int, float or bool; ConfigError if it does not convert"""
    value = config[section][key]
    if kind is bool:
        if isinstance(value, bool):
            return value
    elif not isinstance(value, bool):
        try:
            return kind(value)
        except (TypeError, ValueError):
            pass
    raise ConfigError("{}.{} must be {}, got {!r}".format(section, key, kind.__name__, value))


def strip_unset(overrides):
    """drop command-line values that were not given"""
    return {section: {key: value for key, value in values.items() if value is not None}
            for section, values in overrides.items()}


class StandardScript:
    def __init__(self, config_file=None, overrides=None, environ=None):
        self.init_config(config_file, overrides, environ)
        self.init_logging()

    def init_config(self, config_file=None, overrides=None, environ=None):
        # template defaults < config file < environment < command line
        self.config = template_config()
        if config_file is not None:
            self.config = merge_config(self.config, load_json_file(config_file))
        self.config = merge_config(self.config, env_overrides(self.config, environ))
        if overrides:
            self.config = merge_config(self.config, strip_unset(overrides))

    def init_logging(self):
        """setup logging to file and console"""
        # check if logging is already configured
        if len(logging.getLogger().handlers) > 0:
            logging.getLogger().debug('skip logging setup since loggers are already present')
            return  # logging already configured

        # setup root logger
        # the root level must admit the most verbose handler
        log_config = self.config['LOGGING']
        levels = [logging.getLevelName(log_config['log_level_console'].upper())]
        if log_config['log_dir']:
            levels.append(logging.getLevelName(log_config['log_level_file'].upper()))
        logging.getLogger().setLevel(min(levels))

        # create formatter
        formatter = logging.Formatter('%(asctime)s %(levelname)s: %(message)s')

        # console handler on stderr, stdout is kept for command results
        log_console = logging.StreamHandler(sys.stderr)
        log_console.setLevel(log_config['log_level_console'].upper())
        log_console.setFormatter(formatter)
        logging.getLogger().addHandler(log_console)

        # optional file handler
        if log_config['log_dir']:
            os.makedirs(log_config['log_dir'], exist_ok=True)
            filename = os.path.join(log_config['log_dir'], "oadsmine.log")
            log_file = logging.FileHandler(filename, encoding="utf-8")
            log_file.setLevel(log_config['log_level_file'].upper())
            log_file.setFormatter(formatter)
            logging.getLogger().addHandler(log_file)
