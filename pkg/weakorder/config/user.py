# -*- coding: utf-8 -*-
"""
This module provides user configuration file management features.

It's based on the ConfigParser module (present in the standard library).
Option values are stored as their ``repr`` and parsed back according to the
type of the registered default.
"""

# Std imports
import ast
import os
import os.path as osp
import re
import shutil
import time
import logging
import configparser as cp

# Local imports
from .base import get_conf_path, get_home_dir

logger = logging.getLogger(__name__)

VERSION_PATTERN = re.compile(r'^(\d+)\.(\d+)\.(\d+)$')


def parse_version(version):
    """
    Split an ``X.Y.Z`` config version into a tuple of ints.

    :param str version: Version string.
    :returns: ``(major, minor, patch)``
    :raises ValueError: if the version is not in X.Y.Z format.
    """
    match = VERSION_PATTERN.match(version)
    if match is None:
        raise ValueError('Version number %r is incorrect - must be in X.Y.Z '
                         'format' % version)
    return tuple(int(part) for part in match.groups())


def as_text(value):
    """Text form stored in the .ini file."""
    return value if isinstance(value, str) else repr(value)


class NoDefault:
    pass


# =============================================================================
# Defaults class
# =============================================================================

class DefaultsConfig(cp.ConfigParser):
    """
    Class used to save defaults to a file and as base class for
    UserConfig
    """
    def __init__(self, name, subfolder):
        cp.ConfigParser.__init__(self, interpolation=None)

        self.name = name
        self.subfolder = subfolder

        self.optionxform = str

    def _set(self, section, option, value):
        if not self.has_section(section):
            self.add_section(section)
        value = as_text(value)
        cp.ConfigParser.set(self, section, option, value)

    def _save(self):
        """
        Save config into the associated .ini file
        """
        fname = self.filename()

        def _write_file(path):
            with open(path, 'w', encoding='utf-8') as configfile:
                self.write(configfile)

        try:
            _write_file(fname)
        except OSError:
            # stale handle on some file systems: delete and retry once
            if osp.isfile(fname):
                os.remove(fname)
            time.sleep(0.05)
            try:
                _write_file(fname)
            except OSError:
                logger.exception('Failed to write configuration file %s', fname)

    def filename(self):
        """Create a .ini filename located in user home directory."""
        if self.subfolder is None:
            return osp.join(get_home_dir(), '.%s.ini' % self.name)

        folder = get_conf_path(self.subfolder)
        # keep version snapshots of the defaults out of the main folder
        if 'defaults' in self.name:
            folder = osp.join(folder, 'defaults')
            os.makedirs(folder, exist_ok=True)
        return osp.join(folder, '%s.ini' % self.name)

    def set_defaults(self, defaults):
        for section, options in defaults:
            for option, value in options.items():
                self._set(section, option, value)


# =============================================================================
# User config class
# =============================================================================

class UserConfig(DefaultsConfig):
    """
    UserConfig class, based on ConfigParser.

    :param str name: Name of the config.
    :param defaults: Dictionary of options *or* list of tuples
        ``(section_name, options)``.
    :param bool load: Read existing values from the .ini file.
    :param str version: Version of the configuration file (X.Y.Z format).
    :param str subfolder: The file is saved in ``~/subfolder/name.ini``.
    :param bool backup: Keep a ``.bak`` copy of the file found on disk.
    """
    DEFAULT_SECTION_NAME = 'main'

    def __init__(self, name, defaults=None, load=True, version='0.0.0',
                 subfolder=None, backup=False):
        DefaultsConfig.__init__(self, name, subfolder)
        parse_version(version)

        if isinstance(defaults, dict):
            defaults = [(self.DEFAULT_SECTION_NAME, defaults)]
        self.defaults = defaults or []
        self.reset_to_defaults(save=False)

        fname = self.filename()
        if backup and osp.isfile(fname):
            shutil.copyfile(fname, '%s.bak' % fname)

        if load:
            self.load_from_ini()
            old_version = self.get_version(version)
            self._save_new_defaults(version)

            new, old = parse_version(version), parse_version(old_version)
            if new[:2] != old[:2]:
                self._update_defaults(old_version)
                if new[0] != old[0]:
                    self._remove_deprecated_options(old_version)
                self.set_version(version, save=False)

    def get_version(self, version='0.0.0'):
        """Return configuration (not application!) version"""
        return self.get(self.DEFAULT_SECTION_NAME, 'version', version)

    def set_version(self, version='0.0.0', save=True):
        """Set configuration (not application!) version"""
        self.set(self.DEFAULT_SECTION_NAME, 'version', version, save=save)

    def load_from_ini(self):
        """
        Load config from the associated .ini file
        """
        fname = self.filename()
        if not osp.isfile(fname):
            return
        try:
            with open(fname, encoding='utf-8') as configfile:
                self.read_file(configfile)
        except cp.MissingSectionHeaderError:
            logger.warning('Config file %s contains no section headers', fname)
        except OSError:
            logger.warning('Failed reading config file %s', fname)

    def _defaults_snapshot(self, version):
        return DefaultsConfig(name='defaults-' + version,
                              subfolder=self.subfolder)

    def _load_old_defaults(self, old_version):
        old_defaults = cp.ConfigParser(interpolation=None)
        old_defaults.optionxform = str
        old_defaults.read(self._defaults_snapshot(old_version).filename())
        return old_defaults

    def _save_new_defaults(self, version):
        new_defaults = self._defaults_snapshot(version)
        if not osp.isfile(new_defaults.filename()):
            new_defaults.set_defaults(self.defaults)
            new_defaults._save()

    def _update_defaults(self, old_version):
        """Overwrite options whose default changed since ``old_version``."""
        old_defaults = self._load_old_defaults(old_version)
        for section, options in self.defaults:
            for option, new_value in options.items():
                try:
                    old_value = old_defaults.get(section, option)
                except (cp.NoSectionError, cp.NoOptionError):
                    old_value = None
                if old_value is None or as_text(new_value) != old_value:
                    self._set(section, option, new_value)

    def _remove_deprecated_options(self, old_version):
        """
        Remove options which are present in the .ini file but not in defaults
        """
        old_defaults = self._load_old_defaults(old_version)
        for section in old_defaults.sections():
            for option, _ in old_defaults.items(section, raw=True):
                if self.get_default(section, option) is NoDefault:
                    if self.has_option(section, option):
                        cp.ConfigParser.remove_option(self, section, option)
            if self.has_section(section) and not self.items(section, raw=True):
                cp.ConfigParser.remove_section(self, section)

    def cleanup(self):
        """
        Remove .ini file associated to config
        """
        os.remove(self.filename())

    def reset_to_defaults(self, save=True, section=None):
        """
        Reset config to Default values
        """
        for sec, options in self.defaults:
            if section is None or section == sec:
                for option, value in options.items():
                    self._set(sec, option, value)
        if save:
            self._save()

    def _check_section_option(self, section, option):
        if section is None:
            section = self.DEFAULT_SECTION_NAME
        elif not isinstance(section, str):
            raise ValueError("Argument 'section' must be a string")
        if not isinstance(option, str):
            raise ValueError("Argument 'option' must be a string")
        return section

    def get_default(self, section, option):
        """
        Get Default value for a given (section, option)
        -> useful for type checking in 'get' method
        """
        section = self._check_section_option(section, option)
        for sec, options in self.defaults:
            if sec == section and option in options:
                return options[option]
        return NoDefault

    def get(self, section, option, default=NoDefault):
        """
        Get an option. The stored text is converted back to the type of the
        registered default.

        :param str section: Section name, ``None`` for the default section.
        :param str option: Option name.
        :param default: Returned (and stored) if the option does not exist.
            If not given, a missing option raises an exception.
        """
        section = self._check_section_option(section, option)

        if not self.has_section(section):
            if default is NoDefault:
                raise cp.NoSectionError(section)
            self.add_section(section)

        if not self.has_option(section, option):
            if default is NoDefault:
                raise cp.NoOptionError(option, section)
            self.set(section, option, default, save=False)
            return default

        value = cp.ConfigParser.get(self, section, option, raw=True)
        default_value = self.get_default(section, option)
        if isinstance(default_value, bool):
            return ast.literal_eval(value)
        elif isinstance(default_value, float):
            return float(value)
        elif isinstance(default_value, int):
            return int(value)
        try:
            # strings, lists, tuples, ...
            return ast.literal_eval(value)
        except (SyntaxError, ValueError):
            return value

    def set_default(self, section, option, default_value):
        """
        Set Default value for a given (section, option)
        -> called when a new (section, option) is set and no default exists
        """
        section = self._check_section_option(section, option)
        for sec, options in self.defaults:
            if sec == section:
                options[option] = default_value
                return
        self.defaults.append((section, {option: default_value}))

    def set(self, section, option, value, save=True):
        """
        Set an option, coerced to the type of its default.

        :param str section: Section name, ``None`` for the default section.
        :param str option: Option name.
        :param value: New value.
        :param bool save: Write the .ini file immediately.
        """
        section = self._check_section_option(section, option)
        default_value = self.get_default(section, option)
        if default_value is NoDefault:
            default_value = value
            self.set_default(section, option, default_value)

        if isinstance(default_value, bool):
            value = bool(value)
        elif isinstance(default_value, float):
            value = float(value)
        elif isinstance(default_value, int):
            value = int(value)

        self._set(section, option, value)
        if save:
            self._save()
