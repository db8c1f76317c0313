import pytest

from superspecial.quat_core import find_params


@pytest.fixture(scope='session')
def params3():
    return find_params(3)


@pytest.fixture(scope='session')
def params5():
    return find_params(5)


@pytest.fixture(scope='session', params=[3, 5, 7, 11, 13])
def params(request):
    return find_params(request.param)
