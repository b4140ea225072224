"""
Utilities for use by the unit tests
"""
import os
import random
import shutil
import tempfile
from contextlib import contextmanager

import sympy

from rueppel_lab.config import Config
from rueppel_lab.services.rings import Poly2

SEED = 1729
SYMBOL_B, SYMBOL_C = sympy.symbols('b c')


def cofactor_det(M):
    """Determinant by cofactor expansion along the first row"""
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def random_matrix(rng, n, low=-5, high=5):
    return [[rng.randint(low, high) for _ in range(n)] for _ in range(n)]


def random_poly2(rng, terms=3, degree=2, bound=3):
    """Small random Poly2 with at most `terms` monomials"""
    cs = {}
    for _ in range(terms):
        key = (rng.randint(0, degree), rng.randint(0, degree))
        cs[key] = rng.randint(-bound, bound)
    return Poly2(cs)


def to_sympy(value):
    """A Poly2 (or int) as a sympy expression in b and c"""
    if isinstance(value, int):
        return sympy.Integer(value)
    return sum((v * SYMBOL_B ** i * SYMBOL_C ** j for (i, j), v in value.cs.items()),
               sympy.Integer(0))


def seeded(offset=0):
    return random.Random(SEED + offset)


@contextmanager
def fixture_copy():
    """Installs a temporary copy of the fixture directory as Config.FIXTURE_DIR"""
    original = Config.FIXTURE_DIR
    tmp = tempfile.mkdtemp()
    target = os.path.join(tmp, 'fixtures')
    shutil.copytree(original, target)
    Config.FIXTURE_DIR = target
    try:
        yield target
    finally:
        Config.FIXTURE_DIR = original
        shutil.rmtree(tmp)


def corrupt_fixture(directory, seq_id, index, delta=1):
    """Adds delta to the b-file value at `index` of a fixture copy"""
    file_path = os.path.join(directory, '%s.txt' % seq_id)
    with open(file_path) as f:
        lines = f.read().splitlines()
    for position, line in enumerate(lines):
        if line.startswith('#') or not line.strip():
            continue
        n, value = line.split()
        if int(n) == index:
            lines[position] = '%s %d' % (n, int(value) + delta)
            break
    with open(file_path, 'w') as f:
        f.write('\n'.join(lines) + '\n')
