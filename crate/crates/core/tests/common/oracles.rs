//! Reference computations that avoid the library's cyclotomic and
//! eigenvalue code paths.

use std::collections::BTreeMap;

use alexandria::brieskorn::SingularityDescriptor;
use alexandria::certify::GlobalHypersurface;
use alexandria::cycmod::CycModule;
use alexandria::Poly;
use num_rational::Ratio;
use num_traits::One;
use rand::Rng;

pub fn t_pow_minus_one(n: u64) -> Poly {
    let mut c = vec![0i64; n as usize + 1];
    c[0] = -1;
    c[n as usize] = 1;
    Poly::from_ints(&c)
}

/// `Φ_q` as `(t^q - 1)` divided by every `Φ_d`, `d | q`, `d < q`.
pub fn cyclotomic_by_division(q: u64, cache: &mut BTreeMap<u64, Poly>) -> Poly {
    if let Some(p) = cache.get(&q) {
        return p.clone();
    }
    let mut p = t_pow_minus_one(q);
    for d in 1..q {
        if q % d == 0 {
            let phi = cyclotomic_by_division(d, cache);
            p = p.exact_div(&phi).unwrap().expect("Φ_d divides t^q - 1");
        }
    }
    cache.insert(q, p.clone());
    p
}

/// Number of monodromy eigenvalues of each multiplicative order, by
/// enumerating every tuple `(j_1, …, j_r)`, `0 < j_i < a_i`, and reducing
/// `Σ j_i / a_i` mod 1.
pub fn brute_force_eigenvalue_counts(exps: &[u64]) -> BTreeMap<u64, u64> {
    let l = exps.iter().fold(1u64, |a, &b| num_integer::lcm(a, b));
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    let mut idx = vec![1u64; exps.len()];
    'outer: loop {
        let r = exps.iter().zip(&idx).map(|(&a, &j)| j * (l / a)).sum::<u64>() % l;
        let frac = Ratio::new(r, l);
        *counts.entry(*frac.denom()).or_insert(0) += 1;
        for (pos, j) in idx.iter_mut().enumerate() {
            if *j + 1 < exps[pos] {
                *j += 1;
                continue 'outer;
            }
            *j = 1;
        }
        break;
    }
    counts
}

/// Characteristic polynomial assembled from the enumerated eigenvalue
/// orders and [`cyclotomic_by_division`].
pub fn brute_force_charpoly(exps: &[u64]) -> Poly {
    let mut cache = BTreeMap::new();
    let mut out = Poly::one();
    for (q, n) in brute_force_eigenvalue_counts(exps) {
        let phi = cyclotomic_by_division(q, &mut cache);
        let deg = phi.span() as u64;
        assert_eq!(n % deg, 0, "primitive roots of order {q} come in full Galois orbits");
        out = &out * &phi.pow((n / deg) as u32);
    }
    out
}

/// `#{1 ≤ j ≤ q : gcd(j, q) = 1}`.
pub fn totient_by_count(q: u64) -> u64 {
    (1..=q).filter(|&j| num_integer::gcd(j, q) == 1).count() as u64
}

/// `(t^{mk} - 1)(t - 1) / ((t^m - 1)(t^k - 1))`.
pub fn torus_knot_polynomial(m: u64, k: u64) -> Poly {
    let num = &t_pow_minus_one(m * k) * &t_pow_minus_one(1);
    let den = &t_pow_minus_one(m) * &t_pow_minus_one(k);
    num.exact_div(&den).unwrap().expect("torus knot quotient is exact")
}

/// `det(x·I - A)` for a rational matrix, as a polynomial in `x`.
pub fn charpoly(a: &[Vec<Ratio<num_bigint::BigInt>>]) -> Poly {
    let n = a.len();
    let m: Vec<Vec<Poly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = Poly::constant(-a[i][j].clone());
                    if i == j { &c + &Poly::t() } else { c }
                })
                .collect()
        })
        .collect();
    super::fox::det(m)
}

/// `Π_cycles (x^len - 1) / (x - 1)`: the reduced permutation representation.
pub fn reduced_permutation_charpoly(perm: &[usize]) -> Poly {
    let mut seen = vec![false; perm.len()];
    let mut p = Poly::one();
    for s in 0..perm.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut j = s;
        while !seen[j] {
            seen[j] = true;
            j = perm[j];
            len += 1;
        }
        p = &p * &t_pow_minus_one(len);
    }
    p.exact_div(&t_pow_minus_one(1)).unwrap().unwrap()
}

pub fn random_descriptor<R: Rng>(rng: &mut R) -> SingularityDescriptor {
    match rng.gen_range(0..4) {
        0 => {
            let len = rng.gen_range(1..=3);
            SingularityDescriptor::Brieskorn((0..len).map(|_| rng.gen_range(2..=6)).collect())
        }
        1 => loop {
            let m = rng.gen_range(2..=9u64);
            let k = rng.gen_range(1..=m);
            if num_integer::gcd(m, k) == 1 {
                break SingularityDescriptor::CharPair(m, k);
            }
        },
        2 => SingularityDescriptor::NodalCuspidal { delta: rng.gen_range(0..3), kappa: rng.gen_range(0..3) },
        _ => {
            // cyclotomic or arbitrary explicit factor
            let c: Vec<i64> = (0..rng.gen_range(2..=4)).map(|_| rng.gen_range(-3..=3)).collect();
            let mut c = c;
            *c.last_mut().unwrap() = 1;
            c[0] = if c[0] == 0 { 1 } else { c[0] };
            SingularityDescriptor::ExplicitPoly(Poly::from_ints(&c))
        }
    }
}

pub fn random_hypersurface<R: Rng>(rng: &mut R) -> GlobalHypersurface {
    let p_infinity = if rng.gen_bool(0.3) {
        let q = rng.gen_range(1..=12u64);
        Some(&t_pow_minus_one(q) * &Poly::from_ints(&[2, 1]))
    } else {
        None
    };
    GlobalHypersurface {
        n: rng.gen_range(1..=3),
        degree: rng.gen_range(1..=12),
        transversal: rng.gen_bool(0.5),
        singularities: (0..rng.gen_range(0..5)).map(|_| random_descriptor(rng)).collect(),
        infinity: (0..rng.gen_range(0..2)).map(|_| random_descriptor(rng)).collect(),
        assert_ample: rng.gen_bool(0.5),
        assert_h_vanishing: rng.gen_bool(0.3),
        p_infinity,
    }
}

/// Eigenvalues `k/q` (mod 1) of a semisimple cyclotomic module, by order.
fn eigenvalues(m: &CycModule) -> Vec<Ratio<u64>> {
    m.primaries()
        .iter()
        .flat_map(|p| {
            let q = p.cyclotomic_index().unwrap();
            (1..=q).filter(move |k| num_integer::gcd(*k, q) == 1).map(move |k| Ratio::new(k % q, q))
        })
        .collect()
}

/// Counts of eigenvalue orders of the diagonal action on the tensor product.
pub fn tensor_oracle(a: &CycModule, b: &CycModule) -> BTreeMap<u64, u64> {
    let mut out = BTreeMap::new();
    for x in eigenvalues(a) {
        for y in eigenvalues(b) {
            let s = x + y;
            let frac = s - Ratio::from_integer(s.to_integer());
            *out.entry(*frac.denom()).or_insert(0) += 1;
        }
    }
    out
}
