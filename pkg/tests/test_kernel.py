"""Cross-checks between the compiled enumeration kernel and the pure-Python
fallback, plus a direct brute-force reference for both."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from neronjac import KERNEL_NAME, _kernel, _kernel_py, census, enumerate_balanced

try:
    from neronjac import _speedups
except ImportError:
    _speedups = None

KERNELS = [_kernel_py] + ([_speedups] if _speedups is not None else [])


def brute_force_box(lows, highs, total, masks, thresholds, scale):
    out = []
    for md in itertools.product(
        *(range(lo, hi + 1) for lo, hi in zip(lows, highs))
    ):
        if sum(md) != total:
            continue
        ok = True
        for mask, threshold in zip(masks, thresholds):
            acc = sum(md[v] for v in range(len(md)) if mask >> v & 1)
            if scale * acc < threshold:
                ok = False
                break
        if ok:
            out.append(tuple(md))
    return out


CASES = [
    # (lows, highs, total, masks, thresholds, scale)
    ([-2, -2], [3, 3], 1, [0b01, 0b10], [-4, -4], 4),
    ([-3, -3, -3], [4, 4, 4], 2, [0b001, 0b110, 0b011], [-2, 0, -1], 6),
    ([0, 0, 0, 0], [2, 2, 2, 2], 4, [0b0011, 0b1100, 0b0110], [4, 4, 2], 2),
    ([1, 1], [1, 1], 2, [0b01], [2], 2),
    ([0, 0], [1, 1], 5, [], [], 2),  # infeasible total
    ([-1, -1, -1], [1, 1, 1], 0, [], [], 2),  # no constraints
]


class TestKernelSelection:
    def test_name_is_known(self):
        assert KERNEL_NAME in ("compiled", "python")
        assert _kernel.KERNEL_NAME == KERNEL_NAME

    def test_compiled_extension_builds(self):
        # the sandbox build always has the extension; if this fails the
        # fallback still works but the benchmark comparison is meaningless
        assert _speedups is not None
        assert _speedups.KERNEL_NAME == "compiled"


class TestAgainstBruteForce:
    @pytest.mark.parametrize("case", CASES)
    def test_all_kernels(self, case):
        want = brute_force_box(*case)
        for kernel in KERNELS:
            got = list(kernel.enumerate_box(*case))
            assert got == want, kernel.KERNEL_NAME

    def test_output_is_lexicographic(self):
        for case in CASES:
            for kernel in KERNELS:
                got = list(kernel.enumerate_box(*case))
                assert got == sorted(got)


@pytest.mark.skipif(_speedups is None, reason="compiled kernel unavailable")
class TestCompiledMatchesPure:
    @given(
        st.integers(2, 4).flatmap(
            lambda n: st.tuples(
                st.lists(
                    st.tuples(st.integers(-4, 2), st.integers(-1, 5)),
                    min_size=n,
                    max_size=n,
                ),
                st.integers(-3, 8),
                st.lists(
                    st.tuples(st.integers(1, 2**n - 1), st.integers(-9, 9)),
                    max_size=5,
                ),
            )
        )
    )
    @settings(max_examples=200, deadline=None)
    def test_random_boxes(self, data):
        bounds, total, constraints = data
        lows = [lo for lo, _ in bounds]
        highs = [max(lo, hi) for lo, hi in bounds]
        masks = [m for m, _ in constraints]
        thresholds = [t for _, t in constraints]
        args = (lows, highs, total, masks, thresholds, 4)
        assert list(_speedups.enumerate_box(*args)) == list(
            _kernel_py.enumerate_box(*args)
        )

    def test_balanced_sets_identical_over_census(self, monkeypatch):
        import neronjac._kernel as kernel_mod

        for g in census(3, 3):
            for d in range(-2, 6):
                monkeypatch.setattr(
                    kernel_mod, "enumerate_box", _speedups.enumerate_box
                )
                compiled = enumerate_balanced(g, d)
                monkeypatch.setattr(
                    kernel_mod, "enumerate_box", _kernel_py.enumerate_box
                )
                pure = enumerate_balanced(g, d)
                assert compiled == pure
