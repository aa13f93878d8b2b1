import pytest
from hypothesis import given

from conftest import FIG2_MOTZKIN, FIG2_PERM, FIG2_WORD, dyck_paths
from dyckstat.bijections import (
    bjs_forward,
    bjs_forward_naive,
    bjs_inverse,
    fz_forward,
    fz_inverse,
)
from dyckstat.enumeration import catalan, enumerate_av321, enumerate_bicoloured_motzkin, enumerate_dyck
from dyckstat.paths import BicolouredMotzkinPath, DyckPath, parse_dyck, valleys
from dyckstat.permutations import Permutation, classify, is_321_avoiding


class TestBJS:
    def test_fig2(self, fig2_path):
        assert bjs_forward(fig2_path).images == FIG2_PERM

    def test_no_valleys(self):
        assert bjs_forward(parse_dyck("NNNEEE")) == Permutation.identity(3)

    def test_nene(self):
        assert bjs_forward(parse_dyck("NENE")).images == (2, 1)

    def test_empty(self):
        assert bjs_forward(DyckPath()) == Permutation()
        assert bjs_inverse(Permutation()) == DyckPath()

    def test_inverse_examples(self, fig2_perm):
        assert bjs_inverse(Permutation.identity(3)).steps == "NNNEEE"
        assert bjs_inverse(fig2_perm).steps == FIG2_WORD
        assert bjs_inverse(Permutation((2, 1))).steps == "NENE"

    def test_inverse_rejects_321(self):
        with pytest.raises(ValueError):
            bjs_inverse(Permutation((3, 2, 1)))

    @pytest.mark.parametrize("n", range(9))
    def test_exhaustive(self, n):
        images = set()
        for path in enumerate_dyck(n):
            pi = bjs_forward(path)
            assert pi == bjs_forward_naive(path)
            assert is_321_avoiding(pi)
            assert bjs_inverse(pi) == path
            vs = valleys(path)
            valley_cols = dict(vs)
            for k in range(1, n + 1):
                if k in valley_cols:
                    assert pi(k) == valley_cols[k] > k
                else:
                    assert pi(k) <= k
                fixed = not any(i <= k <= j for i, j in vs)
                assert (pi(k) == k) == fixed
            images.add(pi.images)
        assert len(images) == catalan(n)

    @given(dyck_paths(max_n=40))
    def test_round_trip_random(self, path):
        pi = bjs_forward(path)
        assert pi == bjs_forward_naive(path)
        assert bjs_inverse(pi) == path


class TestFZ:
    def test_fig2(self, fig2_perm):
        m = fz_forward(fig2_perm)
        assert m.steps == FIG2_MOTZKIN
        assert m.positions("U") == [1, 8, 9, 11]
        assert m.positions("D") == [6, 15, 16, 17]
        assert m.positions("L") == [7]
        assert m.positions("B") == [3, 13, 14]
        assert m.positions("R") == [2, 4, 5, 10, 12]

    def test_identity(self):
        assert fz_forward(Permutation.identity(4)).steps == "LLLL"
        assert fz_inverse(BicolouredMotzkinPath("LLLL")) == Permutation.identity(4)

    def test_transposition(self):
        assert fz_forward(Permutation((2, 1))).steps == "UD"
        assert fz_inverse(BicolouredMotzkinPath("UD")).images == (2, 1)

    def test_inverse_fig2(self):
        assert fz_inverse(BicolouredMotzkinPath(FIG2_MOTZKIN)).images == FIG2_PERM

    @pytest.mark.parametrize("images", [(3, 2, 1), (4, 3, 2, 1), (2, 4, 3, 1)])
    def test_rejects_321(self, images):
        with pytest.raises(ValueError):
            fz_forward(Permutation(images))

    @pytest.mark.parametrize("n", range(9))
    def test_exhaustive(self, n):
        count = 0
        for pi in enumerate_av321(n):
            m = fz_forward(pi)
            assert fz_inverse(m) == pi
            cls = classify(pi)
            s = m.steps
            de = len(cls.double_excedances())
            assert s.count("U") == s.count("D") == len(cls.excedances()) - de
            assert s.count("R") == len(cls.double_deficiencies())
            assert s.count("L") == len(cls.fixpoints())
            count += 1
        paths = list(enumerate_bicoloured_motzkin(n))
        assert len(paths) == count == catalan(n)
        for m in paths:
            assert fz_forward(fz_inverse(m)) == m

    @given(dyck_paths(max_n=40))
    def test_round_trip_random(self, path):
        pi = bjs_forward(path)
        m = fz_forward(pi)
        assert fz_inverse(m) == pi
