import numpy as np
import pytest

from hopfint import catalog, settings
from hopfint.exactla import Field, Matrix
from hopfint.hopf_core import HopfAlgebraData

Q = Field.rationals()
F5 = Field.prime(5)
F7 = Field.prime(7)


@pytest.fixture(scope="session")
def kc2():
    return catalog.group_algebra(catalog.cyclic_table(2))


@pytest.fixture(scope="session")
def kc3():
    return catalog.group_algebra(catalog.cyclic_table(3))


@pytest.fixture(scope="session")
def ks3():
    return catalog.group_algebra(catalog.symmetric_table(3))


@pytest.fixture(scope="session")
def dual_c3():
    return catalog.dual_group_algebra(catalog.cyclic_table(3))


@pytest.fixture(scope="session")
def sweedler():
    return catalog.sweedler4()


@pytest.fixture(scope="session")
def taft3():
    return catalog.taft(3, F7, 2)


CATALOG = {
    "k[C2]": lambda: catalog.group_algebra(catalog.cyclic_table(2)),
    "k[C3]": lambda: catalog.group_algebra(catalog.cyclic_table(3)),
    "k[S3]": lambda: catalog.group_algebra(catalog.symmetric_table(3)),
    "F5[C2]": lambda: catalog.group_algebra(catalog.cyclic_table(2), F5),
    "F5[C3]": lambda: catalog.group_algebra(catalog.cyclic_table(3), F5),
    "F5[S3]": lambda: catalog.group_algebra(catalog.symmetric_table(3), F5),
    "k^C2": lambda: catalog.dual_group_algebra(catalog.cyclic_table(2)),
    "k^C3": lambda: catalog.dual_group_algebra(catalog.cyclic_table(3)),
    "k^S3": lambda: catalog.dual_group_algebra(catalog.symmetric_table(3)),
    "F5^C2": lambda: catalog.dual_group_algebra(catalog.cyclic_table(2), F5),
    "F5^C3": lambda: catalog.dual_group_algebra(catalog.cyclic_table(3), F5),
    "F5^S3": lambda: catalog.dual_group_algebra(catalog.symmetric_table(3), F5),
    "sweedler4": catalog.sweedler4,
    "taft(3,F7,2)": lambda: catalog.taft(3, F7, 2),
}


@pytest.fixture(scope="session")
def catalog_algebras():
    return {name: build() for name, build in CATALOG.items()}


@pytest.fixture(scope="session", params=[
    pytest.param(name, marks=pytest.mark.slow) if "S3" in name else name for name in CATALOG
])
def catalog_algebra(request, catalog_algebras):
    return catalog_algebras[request.param]


@pytest.fixture
def settings_file(tmp_path, monkeypatch):
    path = tmp_path / "config" / "settings.json"
    monkeypatch.setattr(settings, "_SETTINGS_FILE", path)
    return path


def mutate(h: HopfAlgebraData, attr: str, index: tuple[int, ...]) -> HopfAlgebraData:
    """A copy of h with one structure-tensor entry increased by one."""
    arrays = {
        "mult": np.array(h.mult),
        "unit": np.array(h.unit),
        "comult": np.array(h.comult),
        "counit": np.array(h.counit),
        "antipode": np.array(h.antipode.data),
    }
    arrays[attr][index] = arrays[attr][index] + 1
    return HopfAlgebraData(
        field=h.field,
        basis=h.basis,
        mult=arrays["mult"],
        unit=arrays["unit"],
        comult=arrays["comult"],
        counit=arrays["counit"],
        antipode=Matrix(h.field, arrays["antipode"]),
        name=f"{h.label} mutated",
    )


@pytest.fixture
def mutated():
    return mutate
