import configparser as cp
import os.path as osp

import pytest

from weakorder.config.user import UserConfig, as_text, parse_version

SUBFOLDER = '.weakorder-test'


def defaults(n=3, m=1, extra=True):
    options = {'n': n, 'm': m, 'ratio': 1.5, 'flag': True, 'name': 'abc',
               'degrees': [1, 2]}
    if extra:
        options['old'] = 0
    return [('Section', options)]


@pytest.fixture
def home(tmp_path, monkeypatch):
    monkeypatch.setenv('HOME', str(tmp_path))
    return tmp_path


def make(version='1.0.0', **kwargs):
    return UserConfig('demo', defaults=defaults(**kwargs), load=True,
                      version=version, subfolder=SUBFOLDER)


def test_parse_version():
    assert parse_version('1.12.3') == (1, 12, 3)
    for bad in ('1.0', 'a.b.c', '1.0.0.0'):
        with pytest.raises(ValueError):
            parse_version(bad)


def test_as_text():
    assert as_text('WARNING') == 'WARNING'
    assert as_text(3) == '3'
    assert as_text([1, 2]) == '[1, 2]'


def test_typed_values(home):
    conf = make()
    assert conf.get('Section', 'n') == 3
    assert conf.get('Section', 'ratio') == 1.5
    assert conf.get('Section', 'flag') is True
    assert conf.get('Section', 'name') == 'abc'
    assert conf.get('Section', 'degrees') == [1, 2]

    conf.set('Section', 'n', '7', save=False)
    assert conf.get('Section', 'n') == 7
    conf.set('Section', 'flag', 0, save=False)
    assert conf.get('Section', 'flag') is False


def test_missing_options(home):
    conf = make()
    assert conf.get('Section', 'absent', 5) == 5
    assert conf.get('Section', 'absent') == 5
    with pytest.raises(cp.NoOptionError):
        conf.get('Section', 'unknown')
    with pytest.raises(cp.NoSectionError):
        conf.get('Nowhere', 'n')
    with pytest.raises(ValueError):
        conf.get(3, 'n')


def test_reset_to_defaults(home):
    conf = make()
    conf.set('Section', 'n', 9, save=False)
    conf.set('Section', 'm', 4, save=False)
    conf.reset_to_defaults(save=False, section='Section')
    assert (conf.get('Section', 'n'), conf.get('Section', 'm')) == (3, 1)


def test_values_persist(home):
    conf = make()
    conf.set('Section', 'n', 11)
    assert conf.filename() == osp.join(str(home), SUBFOLDER, 'demo.ini')
    assert osp.isfile(conf.filename())
    assert make().get('Section', 'n') == 11
    conf.cleanup()
    assert not osp.isfile(conf.filename())


def test_defaults_snapshot_location(home):
    make()
    assert osp.isfile(osp.join(str(home), SUBFOLDER, 'defaults', 'defaults-1.0.0.ini'))


def test_backup_copy(home):
    make().set('Section', 'n', 4)
    UserConfig('demo', defaults=defaults(), version='1.0.0',
               subfolder=SUBFOLDER, backup=True)
    assert osp.isfile(osp.join(str(home), SUBFOLDER, 'demo.ini.bak'))


def test_minor_update_refreshes_changed_defaults(home):
    conf = make()
    conf.set('Section', 'n', 5, save=False)
    conf.set('Section', 'm', 2)

    updated = make(version='1.1.0', n=4)
    assert updated.get_version() == '1.1.0'
    # default of n changed, user value of m survives
    assert updated.get('Section', 'n') == 4
    assert updated.get('Section', 'm') == 2
    assert updated.has_option('Section', 'old')


def test_major_update_removes_deprecated_options(home):
    make().set('Section', 'm', 2)

    updated = make(version='2.0.0', extra=False)
    assert updated.get_version() == '2.0.0'
    assert not updated.has_option('Section', 'old')
    assert updated.get('Section', 'm') == 2


def test_patch_update_keeps_values(home):
    make().set('Section', 'n', 8)
    assert make(version='1.0.1', n=4).get('Section', 'n') == 8


def test_invalid_version(home):
    with pytest.raises(ValueError):
        make(version='one')
