from __future__ import annotations

import pytest

from sonisurf import plotdata as pd

FIG_CSV = "Wavelength (nm),Intensity (AU),Time (min)\n120.0,0.101,6.20\n"


@pytest.fixture(scope="session")
def spectral():
    """Full-size spectral stand-in (82x38 lattice, 3116 points)."""
    return pd.generate_sample(pd.SampleKind.SPECTRAL_STANDIN)


@pytest.fixture()
def sin_small():
    """Small sinusoidal surface: 6x5 lattice, 30 points."""
    return pd.generate_sample(pd.SampleKind.SINUSOIDAL, pd.SampleConfig(nx=6, nz=5))


@pytest.fixture()
def two_points():
    return pd.parse_dataset("0,0,0\n1,1,1\n", pd.Format.CSV)
