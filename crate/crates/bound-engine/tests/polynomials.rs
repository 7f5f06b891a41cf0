//! Bound polynomials against the printed worked examples and exact series
//! coefficients, plus the block-sum bounds built from the sandwich constants.

use bound_engine::{appendix_polynomial, family_polynomials, max_root_ceiling, Family, PolyInP};
use merca_series::{build_series, t_exponents, DenomKind, MercaParams};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use partitions::{p3_bound_data, P3BoundData, ThreePartVariant};
use series_core::Series;

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Printed coefficients `[c₀, c₁, c₂]` as exact rationals.
fn printed(poly: &PolyInP) -> Vec<BigRational> {
    let mut c = poly.printed();
    c.resize(3, BigRational::zero());
    c
}

/// The six polynomials printed for `(r,s) = (9,2)`, as functions of `k`.
fn example_d_forms(k: i64) -> Vec<[i64; 3]> {
    vec![
        [0, 72 * k * k - 20 * k - 8984, 72 * k - 40],
        [-3277, 72 * k * k - 20 * k - 17780, 72 * k - 56],
        [-3177, 72 * k * k - 20 * k - 17860, 72 * k - 40],
        [16 * k * k + 96 * k - 8832, 72 * k * k + 12 * k - 17684, 72 * k - 40],
        [56 * k * k + 156 * k - 12027, 72 * k * k + 132 * k - 17604, 72 * k + 40],
        [72 * k * k + 92 * k - 12159, 72 * k * k + 164 * k - 17780, 72 * k + 40],
    ]
}

fn sorted_forms(polys: &[PolyInP]) -> Vec<Vec<BigRational>> {
    let mut v: Vec<Vec<BigRational>> = polys.iter().map(printed).collect();
    v.sort();
    v
}

#[test]
fn d_family_matches_worked_example_r9_s2() {
    for k in [1i64, 2, 10, 19, 57] {
        let ours = family_polynomials(Family::D, 9, 2, k as u64);
        let mut theirs: Vec<Vec<BigRational>> =
            example_d_forms(k).iter().map(|c| c.iter().map(|&x| rat(x)).collect()).collect();
        theirs.sort();
        assert_eq!(sorted_forms(&ours), theirs, "k={k}");
        // Index by index, only the two case-1 forms trade places.
        let expect = example_d_forms(k);
        for (i, j) in [(0, 0), (1, 2), (2, 3), (3, 4), (4, 5), (5, 1)] {
            let want: Vec<BigRational> = expect[j].iter().map(|&x| rat(x)).collect();
            assert_eq!(printed(&ours[i]), want, "k={k}, index {i}");
        }
    }
}

#[test]
fn e_family_matches_corollary_r2_s1() {
    for k in [1i64, 2, 5, 10, 33] {
        let ours: Vec<Vec<BigRational>> = family_polynomials(Family::E, 2, 1, k as u64).iter().map(printed).collect();
        let want = [
            vec![rat(0), rat(8 * k * k - 40), rat(8 * k)],
            vec![rat(2), rat(8 * k * k - 40), rat(8 * k)],
            vec![rat(-8 + 14 * k + 4 * k * k), rat(-16 + 8 * k + 8 * k * k), rat(8 * k)],
            vec![rat(-14 + 14 * k + 4 * k * k), rat(-16 + 8 * k + 8 * k * k), rat(8 * k)],
            vec![rat(-32 + 8 * k + 8 * k * k), rat(-40 + 16 * k + 8 * k * k), rat(8 * k)],
            vec![frac(-17, 4), rat(-30 + 8 * k * k), rat(-4 + 8 * k)],
        ];
        for (i, w) in want.iter().enumerate() {
            if i == 3 {
                // Only the leading and linear parts of E3(t3) are printed in full.
                assert_eq!(ours[i][0], w[0], "k={k}, E3(t3) constant");
                continue;
            }
            assert_eq!(&ours[i], w, "k={k}, index {i}");
        }
    }
}

/// Case lower bounds for general `n`, derived from the three-part sandwich
/// constants by summing the quasi-polynomial over the blocks.
struct Derived<'a> {
    data: &'a P3BoundData,
    params: MercaParams,
}

impl Derived<'_> {
    fn p2(&self, x: &BigRational) -> BigRational {
        self.data.p2(x)
    }

    fn t(&self, j: u64) -> [BigRational; 4] {
        t_exponents(&self.params, j).as_array().map(|e| BigRational::from_integer(BigInt::from(e)))
    }

    /// `D₀(n, p)`, the contribution of blocks `0..p`, minus `2p(C₃ᵘ − C₃ᵈ)`.
    fn d0(&self, n: &BigRational, p: u64) -> BigRational {
        let mut acc = BigRational::zero();
        for j in 0..p {
            let [t1, t2, t3, t4] = self.t(j);
            acc += self.p2(&(n - t1)) - self.p2(&(n - t2)) - self.p2(&(n - t3)) + self.p2(&(n - t4));
        }
        acc - rat(2 * p as i64) * (&self.data.c3u - &self.data.c3d)
    }

    fn case1(&self, n: &BigRational, p: u64) -> BigRational {
        let [t1, ..] = self.t(p);
        self.d0(n, p) + self.p2(&(n - t1)) + &self.data.c3d
    }

    fn case2(&self, n: &BigRational, p: u64) -> BigRational {
        let [t1, t2, ..] = self.t(p);
        self.d0(n, p) + self.p2(&(n - t1)) - self.p2(&(n - t2)) - (&self.data.c3u - &self.data.c3d)
    }

    fn case3(&self, n: &BigRational, p: u64) -> BigRational {
        let [t1, t2, t3, _] = self.t(p);
        self.d0(n, p) + self.p2(&(n - t1))
            - self.p2(&(n - t2))
            - self.p2(&(n - t3))
            - (rat(2) * &self.data.c3u - &self.data.c3d)
    }
}

/// Checks `scale·coeff(n) ≥ min(poly(p))` over the polynomials bounding each
/// case interval of block `p`, for every `n` in the block.
fn assert_block_bounded(params: &MercaParams, family: Family, p: u64) {
    let polys = family_polynomials(family, params.r(), params.s(), params.k());
    let kind = match family {
        Family::C => DenomKind::Four,
        Family::D => DenomKind::ThreePlus,
        Family::E => DenomKind::ThreeMinus,
    };
    let prev_end = t_exponents(params, p - 1).t4 as usize;
    let t = t_exponents(params, p).as_array().map(|e| e as usize);
    let series: Series = build_series(params, t[3], kind).unwrap();
    let value = |i: usize| polys[i].bound_at(&rat(p as i64));
    let min = |idx: &[usize]| idx.iter().map(|&i| value(i)).min().unwrap();
    // Interval bounds: case 0 on [t4,p−1, t1), case 1 on [t1, t2), case 2 on
    // [t2, t3), case 3 on [t3, t4).
    let bounds = match family {
        Family::C => [min(&[0]), min(&[1]), min(&[2]), min(&[3])],
        _ => [min(&[0]), min(&[1, 5]), min(&[2]), min(&[3, 4])],
    };
    for n in prev_end..t[3] {
        let case = t.iter().take_while(|&&e| e <= n).count();
        let exact = BigRational::from_integer(series.coeff(n).clone());
        assert!(exact >= bounds[case], "{family:?} {params:?} p={p} n={n} case {case}");
    }
}

#[test]
fn bounds_hold_against_exact_coefficients() {
    let samples: &[(u64, u64, u64, Family)] = &[
        (4, 1, 1, Family::C),
        (4, 1, 5, Family::C),
        (10, 3, 40, Family::C),
        (6, 1, 20, Family::C),
        (9, 2, 19, Family::D),
        (9, 2, 10, Family::D),
        (5, 2, 3, Family::D),
        (11, 4, 40, Family::D),
        (2, 1, 1, Family::E),
        (3, 1, 2, Family::E),
        (10, 3, 10, Family::E),
        (7, 3, 25, Family::E),
    ];
    for &(r, s, k, family) in samples {
        let params = MercaParams::new(r, s, k).unwrap();
        let floor = family_polynomials(family, r, s, k)
            .iter()
            .map(|poly| max_root_ceiling(poly).unwrap().p_floor)
            .max()
            .unwrap();
        let start = u64::try_from(floor).unwrap().max(1);
        for p in start..start + 3 {
            assert_block_bounded(&params, family, p);
        }
    }
}

#[test]
fn case_lower_bounds_at_sampled_n_r9_s2_k19() {
    let data = p3_bound_data(9, 2, ThreePartVariant::Plus).unwrap();
    let params = MercaParams::new(9, 2, 19).unwrap();
    let derived = Derived { data: &data, params };
    for p in [1u64, 2, 3, 5, 8] {
        let t = t_exponents(&params, p).as_array().map(|e| e as usize);
        let prev_end = t_exponents(&params, p - 1).t4 as usize;
        let series = build_series(&params, t[3], DenomKind::ThreePlus).unwrap();
        let intervals = [(prev_end, t[0]), (t[0], t[1]), (t[1], t[2]), (t[2], t[3])];
        for (case, &(lo, hi)) in intervals.iter().enumerate() {
            let step = ((hi - lo) / 50).max(1);
            for n in (lo..hi).step_by(step) {
                let x = rat(n as i64);
                let bound = match case {
                    0 => derived.d0(&x, p),
                    1 => derived.case1(&x, p),
                    2 => derived.case2(&x, p),
                    _ => derived.case3(&x, p),
                };
                let exact = BigRational::from_integer(series.coeff(n).clone());
                assert!(exact >= bound, "p={p} n={n} case {case}: {exact} < {bound}");
            }
        }
    }
}

#[test]
fn scales_are_positive_and_printed_normalisation_divides_r() {
    for family in [Family::C, Family::D, Family::E] {
        for index in 0..family.polynomial_count() {
            let poly = appendix_polynomial(family, index, 9, 2, 3).unwrap();
            assert!(poly.scale.is_positive());
            assert!(poly.leading().is_positive());
        }
    }
    let d3 = appendix_polynomial(Family::D, 3, 9, 2, 1).unwrap();
    assert_eq!(d3.printed()[2], rat(112));
    assert_eq!(d3.coeffs[2], BigInt::from(112 * 9));
}
