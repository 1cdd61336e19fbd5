use num_rational::BigRational;
use rayon::prelude::*;

use super::{tuple_at, tuples, NAryAlgebra};
use crate::scalar::{axpy, Scalar};

/// The first violated instance of an identity.
///
/// Basis indices are 0-based; file and report formats shift them to 1-based.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness<S = BigRational> {
    pub tuples: Vec<Vec<usize>>,
    pub lhs: Vec<S>,
    pub rhs: Vec<S>,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckReport<S = BigRational> {
    pub holds: bool,
    pub witness: Option<Witness<S>>,
}

impl<S> CheckReport<S> {
    pub fn pass() -> Self {
        CheckReport {
            holds: true,
            witness: None,
        }
    }

    pub fn fail(witness: Witness<S>) -> Self {
        CheckReport {
            holds: false,
            witness: Some(witness),
        }
    }

    pub(crate) fn from_witness(w: Option<Witness<S>>) -> Self {
        match w {
            None => Self::pass(),
            Some(w) => Self::fail(w),
        }
    }
}

/// Checks `[[x_1..x_n], y_1..y_{n-1}] = Σ_i [x_1.., [x_i, y_1..y_{n-1}], ..x_n]`
/// on every basis tuple; for arity 2 this is the Leibniz identity.
///
/// Basis tuples are scanned in parallel; the reported witness is always the
/// lexicographically smallest violated `(x, y)`.
pub fn check_fundamental_identity<S: Scalar>(alg: &NAryAlgebra<S>) -> CheckReport<S> {
    let n = alg.arity();
    let d = alg.dim();
    if d == 0 || alg.is_abelian() {
        return CheckReport::pass();
    }
    // right_mults[y][a] = [e_a, y_1..y_{n-1}]
    let ys: Vec<Vec<usize>> = tuples(d, n - 1).collect();
    let right_mults: Vec<Vec<Vec<S>>> = ys
        .iter()
        .map(|y| {
            (0..d)
                .map(|a| {
                    let mut t = Vec::with_capacity(n);
                    t.push(a);
                    t.extend_from_slice(y);
                    alg.basis_bracket(&t)
                })
                .collect()
        })
        .collect();

    let x_count = d.pow(n as u32);
    let witness = (0..x_count).into_par_iter().find_map_first(|xi| {
        let x = tuple_at(xi, d, n);
        let cx = alg.basis_bracket(&x);
        for (y, ry) in ys.iter().zip(&right_mults) {
            let mut lhs = vec![S::zero(); d];
            for (a, c) in cx.iter().enumerate() {
                axpy(&mut lhs, c, &ry[a]);
            }
            let mut rhs = vec![S::zero(); d];
            for i in 0..n {
                let term = alg.bracket_with_slot(&x, i, &ry[x[i]]);
                for (r, t) in rhs.iter_mut().zip(term) {
                    *r += t;
                }
            }
            if lhs != rhs {
                return Some(Witness {
                    tuples: vec![x.clone(), y.clone()],
                    lhs,
                    rhs,
                    note: "fundamental identity [[x],y] = sum_i [..,[x_i,y],..]".into(),
                });
            }
        }
        None
    });
    CheckReport::from_witness(witness)
}

/// Checks that every adjacent transposition of a basis tuple negates the bracket.
/// Over characteristic zero this is equivalent to factoring through the exterior power.
pub fn check_skew<S: Scalar>(alg: &NAryAlgebra<S>) -> CheckReport<S> {
    let n = alg.arity();
    let d = alg.dim();
    for t in tuples(d, n) {
        let ct = alg.basis_bracket(&t);
        for s in 0..n - 1 {
            let mut sw = t.clone();
            sw.swap(s, s + 1);
            let neg: Vec<S> = alg.basis_bracket(&sw).into_iter().map(|x| -x).collect();
            if ct != neg {
                return CheckReport::fail(Witness {
                    tuples: vec![t, sw],
                    lhs: ct,
                    rhs: neg,
                    note: format!("swapping slots {} and {} does not negate", s + 1, s + 2),
                });
            }
        }
    }
    CheckReport::pass()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functors::{build_l2, build_sl2, build_vn, u_n};
    use crate::Rational;

    #[test]
    fn abelian_passes_everything() {
        for n in 2..5 {
            let a = NAryAlgebra::<Rational>::abelian(n, 3).unwrap();
            assert!(check_fundamental_identity(&a).holds);
            assert!(check_skew(&a).holds);
        }
    }

    #[test]
    fn vn_is_n_lie() {
        let v3 = build_vn::<Rational>(3).unwrap();
        assert!(check_fundamental_identity(&v3).holds);
        assert!(check_skew(&v3).holds);
    }

    #[test]
    fn single_cube_entry_fails_with_witness() {
        // [e1,e1,e1] = e1: LHS = e1, RHS = 3 e1 on the tuple (1,1,1),(1,1).
        let mut a = NAryAlgebra::<Rational>::abelian(3, 1).unwrap();
        a.set_product(&[0, 0, 0], vec![Rational::from_int(1)])
            .unwrap();
        let r = check_fundamental_identity(&a);
        assert!(!r.holds);
        let w = r.witness.unwrap();
        assert_eq!(w.tuples, vec![vec![0, 0, 0], vec![0, 0]]);
        assert_eq!(w.lhs, vec![Rational::from_int(1)]);
        assert_eq!(w.rhs, vec![Rational::from_int(3)]);
    }

    #[test]
    fn u3_sl2_is_not_skew() {
        let u3 = u_n(&build_sl2::<Rational>(), 3).unwrap();
        assert!(check_fundamental_identity(&u3).holds);
        let r = check_skew(&u3);
        assert!(!r.holds);
    }

    #[test]
    fn l2_is_leibniz_but_not_lie() {
        let l2 = build_l2::<Rational>();
        assert!(check_fundamental_identity(&l2).holds);
        assert!(!check_skew(&l2).holds);
    }

    #[test]
    fn witness_is_deterministic() {
        let mut sl2 = build_sl2::<Rational>();
        let three = Rational::from_int(3);
        sl2.set_product(
            &[1, 0],
            vec![three.clone(), Rational::from_int(0), Rational::from_int(0)],
        )
        .unwrap();
        sl2.set_product(
            &[0, 1],
            vec![-three, Rational::from_int(0), Rational::from_int(0)],
        )
        .unwrap();
        let a = check_fundamental_identity(&sl2);
        let b = check_fundamental_identity(&sl2);
        assert!(!a.holds);
        assert_eq!(a, b);
    }
}
