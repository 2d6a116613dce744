import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from quantum_znumbers.dataio import medical_case  # noqa: E402

# Medical case inputs, typed in independently of the bundled data file.
SAMPLE_A = [[0.35, 0.43, 0.12, 0.61], [0.26, 0.49, 0.43, 0.36], [0.68, 0.73, 0.12, 0.08]]
SAMPLE_B = [[0.77, 0.38, 0.84, 0.83], [0.33, 0.81, 0.72, 0.28], [0.82, 0.89, 0.86, 0.61]]
REF_A = [[0.41, 0.43, 0.37, 0.12], [0.84, 0.86, 0.21, 0.15], [0.25, 0.32, 0.69, 0.38], [0.18, 0.24, 0.14, 0.79]]
REF_B = [[0.83, 0.87, 0.81, 0.82], [0.95, 0.92, 0.87, 0.85], [0.91, 0.96, 0.89, 0.92], [0.81, 0.87, 0.84, 0.85]]
PATIENTS = ["Alice", "Bob", "Charlie"]
DIAGNOSES = ["Stomach problem", "Viral fever", "Malaria", "Typhoid"]

# Published score matrices; these carry shot noise, hence the loose bands.
TARGET_QFM = [
    [0.5046, 0.2632, 0.3366, 0.6434],
    [0.4382, 0.1768, 0.2708, 0.3198],
    [0.7194, 0.8146, 0.3282, 0.2520],
]
TARGET_PM = [
    [-0.8524, -0.3361, -0.4371, 0.9198],
    [0.5588, 0.1624, 0.4158, -0.4643],
    [0.7928, 0.9915, -0.6616, -0.5285],
]
TARGET_QFS = [
    [0.6554, 0.4514, 0.6030, 0.8792],
    [0.8830, 0.4908, 0.9044, 0.6572],
    [0.7474, 0.9112, 0.3896, 0.2790],
]
# Rotation angles in degrees: A then B, samples then references.
ROTATION_DEGREES = {
    "sample_a": [[107.458, 98.048, 139.464, 77.291], [118.685, 91.146, 98.048, 106.260], [68.900, 62.613, 139.464, 147.140]],
    "sample_b": [[57.316, 103.887, 47.156, 48.700], [109.877, 51.684, 63.896, 116.104], [50.208, 38.739, 43.946, 77.291]],
    "ref_a": [[100.370, 98.048, 105.070, 139.464], [47.156, 43.946, 125.451, 134.427], [120.000, 111.100, 67.666, 103.887], [129.792, 121.332, 136.054, 54.549]],
    "ref_b": [[48.700, 42.269, 51.684, 50.208], [25.842, 32.860, 42.269, 45.573], [34.915, 23.074, 38.739, 32.860], [51.684, 42.269, 47.156, 45.573]],
}
PROPOSED = ["Typhoid", "Stomach problem", "Viral fever"]
ZN_BASED = ["Typhoid", "Stomach problem", "Viral fever"]
QFS_BASED = ["Typhoid", "Malaria", "Viral fever"]


@pytest.fixture(scope="session")
def medical():
    return medical_case()


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
