//! Reduced Burau representation.
//!
//! Convention: matrices act on row vectors and a word is the product of its
//! letters' matrices from left to right. The generator `σ_i` acts as the
//! identity except in row `i` (1-based), which reads `(…, t, -t, 1, …)` with
//! `-t` on the diagonal; the `t` and `1` are dropped at the borders. On two
//! strands `σ_1 ↦ (-t)`. At `t = 1` this is the reduced permutation
//! representation.

use num_traits::{One, Zero};

use super::BraidWord;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::matrix::LaurentMatrix;
use crate::scalar::Scalar;

fn check_index(i: usize, strands: usize) -> Result<()> {
    if strands < 2 || i == 0 || i >= strands {
        return Err(Error::InvalidBraid(format!("generator σ_{i} does not exist on {strands} strands")));
    }
    Ok(())
}

/// Image of `σ_i` on `strands` strands, an `(n-1) × (n-1)` matrix.
pub fn burau_generator<T: Scalar>(i: usize, strands: usize) -> Result<LaurentMatrix<T>> {
    check_index(i, strands)?;
    let mut m = LaurentMatrix::identity(strands - 1);
    let r = i - 1;
    m.set(r, r, -LaurentPoly::t());
    if r > 0 {
        m.set(r, r - 1, LaurentPoly::t());
    }
    if r + 1 < strands - 1 {
        m.set(r, r + 1, LaurentPoly::one());
    }
    Ok(m)
}

/// Image of `σ_i⁻¹`: row `i` reads `(…, 1, -t⁻¹, t⁻¹, …)`.
pub fn burau_generator_inverse<T: Scalar>(i: usize, strands: usize) -> Result<LaurentMatrix<T>> {
    check_index(i, strands)?;
    let mut m = LaurentMatrix::identity(strands - 1);
    let r = i - 1;
    let t_inv = LaurentPoly::monomial(T::one(), -1);
    m.set(r, r, -t_inv.clone());
    if r > 0 {
        m.set(r, r - 1, LaurentPoly::one());
    }
    if r + 1 < strands - 1 {
        m.set(r, r + 1, t_inv);
    }
    Ok(m)
}

/// Multiplies the generator image of `letter` onto `acc` from the right,
/// touching only the two or three affected columns.
fn apply_letter<T: Scalar>(acc: &mut LaurentMatrix<T>, letter: i64) {
    let n = acc.cols();
    let r = letter.unsigned_abs() as usize - 1;
    let t = LaurentPoly::<T>::t();
    let t_inv = LaurentPoly::monomial(T::one(), -1);
    for row in 0..acc.rows() {
        let x = acc.get(row, r).clone();
        if x.is_zero() {
            continue;
        }
        // row vector v times generator: column r gets -t·v_r (or -t⁻¹·v_r),
        // columns r∓1 pick up multiples of v_r
        let (diag, left, right) = if letter > 0 {
            (-&t * &x, &t * &x, x.clone())
        } else {
            (-&t_inv * &x, x.clone(), &t_inv * &x)
        };
        acc.set(row, r, diag);
        if r > 0 {
            let v = acc.get(row, r - 1) + &left;
            acc.set(row, r - 1, v);
        }
        if r + 1 < n {
            let v = acc.get(row, r + 1) + &right;
            acc.set(row, r + 1, v);
        }
    }
}

/// Ordered product of the generator images of `w`.
pub fn burau_word<T: Scalar>(w: &BraidWord) -> LaurentMatrix<T> {
    let mut acc = LaurentMatrix::identity(w.strands() - 1);
    for &l in w.letters() {
        apply_letter(&mut acc, l);
    }
    acc
}

/// Whether the ordered product of the words equals the full twist `Δ²`, as
/// Burau matrices. Words on differing strand counts, or an empty list, fail.
pub fn validate_factorization(words: &[BraidWord]) -> bool {
    let Some(first) = words.first() else {
        return false;
    };
    let n = first.strands();
    if words.iter().any(|w| w.strands() != n) {
        return false;
    }
    let mut acc = LaurentMatrix::<crate::BigInt>::identity(n - 1);
    for w in words {
        for &l in w.letters() {
            apply_letter(&mut acc, l);
        }
    }
    acc == burau_word(&BraidWord::full_twist(n).expect("n >= 2"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{IntMatrix, IntPoly};

    fn word(s: &str, n: usize) -> BraidWord {
        BraidWord::parse(s, n).unwrap()
    }

    #[test]
    fn two_strand_image() {
        let m: IntMatrix = burau_generator(1, 2).unwrap();
        assert_eq!(m.get(0, 0), &IntPoly::from_ints(&[0, -1]));
        let sq: IntMatrix = burau_word(&word("1,1", 2));
        assert_eq!(sq.get(0, 0), &IntPoly::from_ints(&[0, 0, 1]));
        assert!(burau_generator::<crate::BigInt>(2, 2).is_err());
    }

    #[test]
    fn letter_application_matches_matrix_product() {
        for n in 2..6 {
            for i in 1..n {
                let g: IntMatrix = burau_generator(i, n).unwrap();
                let gi: IntMatrix = burau_generator_inverse(i, n).unwrap();
                assert!((&g * &gi).is_identity());
                assert_eq!(burau_word::<crate::BigInt>(&word(&i.to_string(), n)), g);
                assert_eq!(burau_word::<crate::BigInt>(&word(&format!("-{i}"), n)), gi);
            }
        }
        let w = word("1,-2,3,2,-1", 4);
        let product = w.letters().iter().fold(IntMatrix::identity(3), |acc, &l| {
            let g = if l > 0 {
                burau_generator(l as usize, 4).unwrap()
            } else {
                burau_generator_inverse((-l) as usize, 4).unwrap()
            };
            &acc * &g
        });
        assert_eq!(burau_word::<crate::BigInt>(&w), product);
    }

    #[test]
    fn full_twist_is_central() {
        let d: IntMatrix = burau_word(&BraidWord::full_twist(3).unwrap());
        for i in 1..3 {
            let g: IntMatrix = burau_generator(i, 3).unwrap();
            assert_eq!(&d * &g, &g * &d);
        }
        // on three strands Δ² acts as the scalar t³
        assert_eq!(d, IntMatrix::diagonal(vec![IntPoly::monomial(1.into(), 3); 2]));
    }

    #[test]
    fn factorization_checks() {
        assert!(validate_factorization(&[word("1", 2), word("1", 2)]));
        assert!(!validate_factorization(&[word("1", 3)]));
        assert!(!validate_factorization(&[word("1", 2), word("1", 3)]));
        assert!(!validate_factorization(&[]));
    }
}
