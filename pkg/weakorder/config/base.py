"""
Base configuration management

This file only deals with locating configuration files on disk. It does not
import anything from the rest of the package so that it can be used to
quickly load a user config file.
"""

import os
import os.path as osp
import tempfile
import logging

logger = logging.getLogger(__name__)


# =============================================================================
# Configuration paths
# =============================================================================

def get_home_dir():
    """
    Return user home directory
    """
    try:
        path = osp.expanduser('~')
    except Exception:
        path = ''

    if osp.isdir(path):
        return path

    # Get home from alternative locations
    for env_var in ('HOME', 'USERPROFILE', 'TMP'):
        path = os.environ.get(env_var, '')
        if osp.isdir(path):
            return path

    return tempfile.gettempdir()


def get_conf_path(subfolder=None, filename=None):
    """Return absolute path to the config file with the specified filename."""
    conf_dir = osp.join(get_home_dir(), subfolder)

    if not osp.isdir(conf_dir):
        try:
            os.makedirs(conf_dir)
        except OSError:
            # read-only home, keep settings for this session only
            conf_dir = osp.join(tempfile.gettempdir(), subfolder)
            os.makedirs(conf_dir, exist_ok=True)
            logger.debug('Home directory not writable, using %s', conf_dir)

    if filename is None:
        return conf_dir
    else:
        return osp.join(conf_dir, filename)
