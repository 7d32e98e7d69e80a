# -*- coding: utf-8 -*-
"""
Configuration options

Note: Leave this file free of imports from the rest of the package, so that it
can be used to quickly load a user config file.
"""
# local imports
from .user import UserConfig

PACKAGE_NAME = 'weakorder'
SUBFOLDER = '.%s' % PACKAGE_NAME


# =============================================================================
#  Defaults
# =============================================================================
DEFAULTS = [
            ('Verify',
             {
              'workers': 1,
              'type_b_max_rank': 3,
              'dihedral_max_order': 12,
              }),
            # default --max-degree of each verification suite
            ('Suites',
             {
              'thm4.1': 6,
              'thm5.1': 8,
              'thm6.1': 10,
              'thm2.5': 7,
              'thm2.9': 6,
              'prop3.5': 8,
              'prop4.5': 6,
              'prop4.6': 6,
              'prop5.3': 6,
              'propA.2': 5,
              'corA.4': 5,
              'lemmas': 9,
              'orders': 6,
              'counts': 8,
              'example': 6,
              }),
            # highest degree checked for each identity of the lemmas suite
            ('Lemmas',
             {
              'weak_order': 5,
              'max_decomposition': 6,
              'shuffle_interval': 7,
              'blocks': 6,
              'translation': 5,
              'xi_identity': 9,
              'shuffle_associativity': 6,
              'associativity': 6,
              'rotations': 5,
              }),
            ('Logging',
             {
              'level': 'WARNING',
              }),
            ]


# =============================================================================
# Config instance
# =============================================================================
# IMPORTANT NOTES:
# 1. If you want to *change* the default value of a current option, you need to
#    do a MINOR update in config version, e.g. from 1.0.0 to 1.1.0
# 2. If you want to *remove* options that are no longer needed in our codebase,
#    or if you want to *rename* options, then you need to do a MAJOR update in
#    version, e.g. from 1.0.0 to 2.0.0
# 3. You don't need to touch this value if you're just adding a new option
CONF_VERSION = '1.1.0'

# Main configuration instance
try:
    CONF = UserConfig(PACKAGE_NAME, defaults=DEFAULTS, load=True,
                      version=CONF_VERSION, subfolder=SUBFOLDER, backup=True)
except Exception:
    CONF = UserConfig(PACKAGE_NAME, defaults=DEFAULTS, load=False,
                      version=CONF_VERSION, subfolder=SUBFOLDER, backup=True)
