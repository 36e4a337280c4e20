from pytest import fixture
from models import make_model
from solver import assemble_system, generalized_eig

@fixture(scope='session')
def bgk_model():
    """fixture с моделью BGK"""
    return make_model('bgk')

@fixture(scope='session')
def nte_model():
    """fixture с моделью NTE"""
    return make_model('nte')

@fixture(scope='session')
def bgk_system(bgk_model):
    """fixture с собранной системой BGK, N = 8, u = 0"""
    return assemble_system(bgk_model, 8, 0.0)

@fixture(scope='session')
def bgk_shifted_system(bgk_model):
    """fixture с собранной системой BGK, N = 8, u = 0.5"""
    return assemble_system(bgk_model, 8, 0.5)

@fixture(scope='session')
def nte_system(nte_model):
    """fixture с собранной системой NTE, N = 8"""
    return assemble_system(nte_model, 8)

@fixture(scope='session')
def bgk_eig(bgk_system):
    """fixture с собственными парами системы BGK"""
    return generalized_eig(bgk_system.A, bgk_system.B, bgk_system.tol_zero)

@fixture(scope='session')
def nte_eig(nte_system):
    """fixture с собственными парами системы NTE"""
    return generalized_eig(nte_system.A, nte_system.B, nte_system.tol_zero)

@fixture
def cache_dir(tmp_path):
    """fixture с пустым каталогом кэша"""
    return tmp_path / 'cache'
