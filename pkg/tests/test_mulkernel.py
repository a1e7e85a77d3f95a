"""Kernel of the multiplication map R^3 x R^3 -> R^6 on cubic Fermat
rings: generator families, standardization certificates, and the
span-equals-kernel verdicts."""

import itertools

import pytest

from grifcalc.errors import DegreeMismatch, NotInKernel, OutOfRange
from grifcalc.jacobian import TensorSum, monomials_of_degree
from grifcalc.mulkernel import (Certificate, RankOneGenerator, StandardTensor,
                                cubic_ring, kernel_dimension, mu_apply,
                                rank_one_generators, span_equals_kernel,
                                standardize, swap_identity_holds,
                                tensor_in_kernel, verify_certificate,
                                _monomial)
from grifcalc.scalar import Scalar

ONE = Scalar.from_fraction(1)


def brute_pair_count(nvars):
    # oracle: unordered products of reduced cubic monomials sharing a
    # variable, counted as ordered tensors m (x) m' with shared support
    monos = [e for e in monomials_of_degree(nvars, 3) if max(e) <= 1]
    count = 0
    for left in monos:
        for right in monos:
            if any(l and r for l, r in zip(left, right)):
                count += 1
    return count


def test_mu_apply_products():
    ring = cubic_ring(6)
    w = TensorSum.simple(_monomial(6, (0, 1, 2)), _monomial(6, (3, 4, 5)))
    image = mu_apply(ring, w)
    assert not image.is_zero()
    assert set(image.terms) == {(1, 1, 1, 1, 1, 1)}
    shared = TensorSum.simple(_monomial(6, (0, 1, 2)), _monomial(6, (0, 4, 5)))
    assert mu_apply(ring, shared).is_zero()


def test_mu_apply_requires_cubic_fermat():
    from grifcalc.jacobian import HomogeneousPolynomial, HypersurfaceRing
    quartic = HypersurfaceRing.fermat(4, 6)
    w = TensorSum.simple(_monomial(6, (0, 1, 2)), _monomial(6, (3, 4, 5)))
    with pytest.raises(DegreeMismatch):
        mu_apply(quartic, w)


def test_generator_counts_against_brute_oracle():
    pairs6 = rank_one_generators(6, family="monomial_pair")
    assert len(pairs6) == 380 == brute_pair_count(6)
    pairs9 = rank_one_generators(9, family="monomial_pair")
    assert len(pairs9) == 5376 == brute_pair_count(9)
    swaps9 = rank_one_generators(9, family="swap_binomial")
    assert len(swaps9) == 31752


def test_all_generators_live_in_the_kernel_small():
    for nvars in (4, 5, 6):
        for gen in rank_one_generators(nvars):
            assert gen.in_kernel(), gen


def test_generator_family_shapes():
    for gen in rank_one_generators(5):
        if gen.family_tag == "monomial_pair":
            assert len(gen.left.terms) == 1 and len(gen.right.terms) == 1
        else:
            assert len(gen.left.terms) == 2 and len(gen.right.terms) == 2
    with pytest.raises(ValueError):
        RankOneGenerator("mystery", _monomial(5, (0, 1, 2)),
                         _monomial(5, (0, 3, 4)))


def test_kernel_dimensions():
    # (kernel dim, rank of mu, dim R^3); on four variables R^6 = 0 so
    # the kernel is everything
    assert kernel_dimension(4) == (16, 0, 4)
    assert kernel_dimension(5) == (100, 0, 10)
    assert kernel_dimension(6) == (399, 1, 20)
    assert kernel_dimension(7) == (1218, 7, 35)
    assert kernel_dimension(9) == (6972, 84, 84)


def test_standard_tensor_validation():
    st = StandardTensor(9, (0, 2, 3, 5, 7, 8))
    assert st.left_indices == (0, 2, 3)
    assert st.right_indices == (5, 7, 8)
    with pytest.raises(ValueError):
        StandardTensor(9, (0, 2, 2, 5, 7, 8))
    with pytest.raises(OutOfRange):
        StandardTensor(6, (0, 1, 2, 3, 4, 6))


def test_standardize_already_standard():
    ring = cubic_ring(6)
    w = TensorSum.simple(_monomial(6, (0, 1, 2)), _monomial(6, (3, 4, 5)))
    std, cert = standardize(ring, w)
    assert list(std) == [StandardTensor(6, (0, 1, 2, 3, 4, 5))]
    assert std[StandardTensor(6, (0, 1, 2, 3, 4, 5))] == ONE
    assert cert.moves == ()


def test_standardize_single_swap():
    # one bubbling step: three certificate moves, standard core preserved
    ring = cubic_ring(6)
    w = TensorSum.simple(_monomial(6, (0, 1, 3)), _monomial(6, (2, 4, 5)))
    std, cert = standardize(ring, w)
    assert list(std) == [StandardTensor(6, (0, 1, 2, 3, 4, 5))]
    assert len(cert.moves) == 3
    assert verify_certificate(cert)
    tags = sorted(gen.family_tag for gen, _ in cert.moves)
    assert tags == ["monomial_pair", "monomial_pair", "swap_binomial"]


def test_standardize_round_trip():
    # w equals its standard part plus the certificate moves, exactly
    ring = cubic_ring(7)
    w = TensorSum.simple(_monomial(7, (2, 5, 6)), _monomial(7, (0, 1, 3)))
    std, cert = standardize(ring, w)
    summands = [(coeff, st.tensor().summands[0][1], st.tensor().summands[0][2])
                for st, coeff in std.items()]
    rebuilt = TensorSum(summands + list(cert.tensor_sum()))
    gap = w + rebuilt.scale(Scalar.from_fraction(-1))
    assert not gap.monomial_expansion()


def test_standardize_shared_index_is_pure_certificate():
    ring = cubic_ring(6)
    w = TensorSum.simple(_monomial(6, (0, 1, 2)), _monomial(6, (0, 4, 5)))
    std, cert = standardize(ring, w)
    assert std == {}
    assert len(cert.moves) == 1
    assert cert.moves[0][0].family_tag == "monomial_pair"


def test_standardize_kernel_membership_criterion():
    ring = cubic_ring(6)
    in_kernel = TensorSum.simple(_monomial(6, (0, 1, 2)), _monomial(6, (0, 4, 5)))
    std, _ = standardize(ring, in_kernel)
    assert std == {}
    not_in_kernel = TensorSum.simple(_monomial(6, (0, 1, 3)), _monomial(6, (2, 4, 5)))
    std, _ = standardize(ring, not_in_kernel)
    assert std != {}


def test_verify_certificate_cases():
    assert verify_certificate(Certificate(()))
    good = RankOneGenerator("monomial_pair", _monomial(6, (0, 1, 2)),
                            _monomial(6, (0, 4, 5)))
    assert verify_certificate(Certificate(((good, ONE),)))
    bad = RankOneGenerator("monomial_pair", _monomial(6, (0, 1, 2)),
                           _monomial(6, (3, 4, 5)))
    assert not verify_certificate(Certificate(((bad, ONE),)))


def test_swap_identity():
    for nvars in (6, 7):
        assert swap_identity_holds(nvars)


def test_span_equals_kernel_exact_small():
    for nvars in (4, 5, 6, 7):
        report = span_equals_kernel(nvars, mode="span_rank", exact=True)
        assert report.verdict is True
        assert report.span_rank == report.kernel_dim
        assert report.exact is True


def test_span_equals_kernel_modp_nine_variables():
    report = span_equals_kernel(9, mode="span_rank")
    assert report.verdict is True
    assert report.kernel_dim == 6972
    assert report.span_rank == 6972
    assert report.dim_r3 == 84 and report.dim_r6 == 84
    assert report.prime is not None


def test_span_equals_kernel_standardize_mode():
    report = span_equals_kernel(6, mode="standardize")
    assert report.verdict is True
    assert report.standardized_vectors == 399
    assert report.swap_identity_checked
    assert report.certificate_moves > 0


def test_span_report_json_shape():
    report = span_equals_kernel(5, mode="span_rank", exact=True)
    data = report.to_json()
    for key in ("nvars", "mode", "exact", "prime", "dim_r3", "dim_r6",
                "kernel_dim", "span_rank", "verdict"):
        assert key in data


def test_nvars_range_guards():
    with pytest.raises(OutOfRange):
        span_equals_kernel(3)
    with pytest.raises(OutOfRange):
        span_equals_kernel(10)
    with pytest.raises(OutOfRange):
        span_equals_kernel(9, exact=True)  # exact arithmetic capped at 7


def test_tensor_in_kernel():
    ring = cubic_ring(6)
    w = TensorSum.simple(_monomial(6, (0, 1, 2)), _monomial(6, (0, 4, 5)))
    assert tensor_in_kernel(ring, w)
    out = TensorSum.simple(_monomial(6, (0, 1, 2)), _monomial(6, (3, 4, 5)))
    with pytest.raises(NotInKernel):
        tensor_in_kernel(ring, out)
