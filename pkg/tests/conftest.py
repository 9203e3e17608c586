import pytest

from grassmann.fields import QQ, PrimeField

GF3 = PrimeField(3)
GF5 = PrimeField(5)


@pytest.fixture(params=[QQ, GF5], ids=["q", "fp5"])
def field(request):
    return request.param
