use crate::algebra::{tuples, NAryAlgebra};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// Sets `[a,b] = c·e_t` and `[b,a] = −c·e_t`.
fn set_antisym<S: Scalar>(alg: &mut NAryAlgebra<S>, a: usize, b: usize, c: i64, t: usize) {
    alg.add_to_product(&[a, b], S::from_int(c), t)
        .expect("indices in range");
    alg.add_to_product(&[b, a], S::from_int(-c), t)
        .expect("indices in range");
}

/// sl2 with basis `(e, h, f)`: `[h,e] = 2e`, `[h,f] = −2f`, `[e,f] = h`.
pub fn build_sl2<S: Scalar>() -> NAryAlgebra<S> {
    let mut a = NAryAlgebra::new("sl2", 2, labels(&["e", "h", "f"])).expect("arity 2");
    set_antisym(&mut a, 1, 0, 2, 0);
    set_antisym(&mut a, 1, 2, -2, 2);
    set_antisym(&mut a, 0, 2, 1, 1);
    a.set_metadata("recipe=sl2");
    a
}

/// The two-dimensional Leibniz algebra with the single product `[f,f] = e`.
pub fn build_l2<S: Scalar>() -> NAryAlgebra<S> {
    let mut a = NAryAlgebra::new("L2", 2, labels(&["e", "f"])).expect("arity 2");
    a.add_to_product(&[1, 1], S::one(), 0).expect("in range");
    a.set_metadata("recipe=l2");
    a
}

/// Three-dimensional Heisenberg Lie algebra `[x,y] = z`.
pub fn build_heisenberg<S: Scalar>() -> NAryAlgebra<S> {
    let mut a = NAryAlgebra::new("heis3", 2, labels(&["x", "y", "z"])).expect("arity 2");
    set_antisym(&mut a, 0, 1, 1, 2);
    a.set_metadata("recipe=heisenberg");
    a
}

/// Two-dimensional non-abelian Lie algebra `[x,y] = y`.
pub fn build_solvable_2d<S: Scalar>() -> NAryAlgebra<S> {
    let mut a = NAryAlgebra::new("r2", 2, labels(&["x", "y"])).expect("arity 2");
    set_antisym(&mut a, 0, 1, 1, 1);
    a.set_metadata("recipe=solvable2");
    a
}

/// The simple (n+1)-dimensional n-Lie algebra: the skew-symmetric extension of
/// `[e_1, …, ê_i, …, e_{n+1}] = (−1)^{n+1+i} e_i` (1-based `i`).
pub fn build_vn<S: Scalar>(n: usize) -> Result<NAryAlgebra<S>> {
    if n < 2 {
        return Err(Error::Precondition(format!("V_n needs n >= 2, got {n}")));
    }
    let dim = n + 1;
    let names: Vec<String> = (1..=dim).map(|i| format!("e{i}")).collect();
    let mut a = NAryAlgebra::new(format!("V{n}"), n, names)?;
    for t in tuples(dim, n) {
        let mut seen = vec![false; dim];
        if t.iter().any(|&i| std::mem::replace(&mut seen[i], true)) {
            continue;
        }
        let missing = seen.iter().position(|s| !s).expect("one index is missing");
        // sign of the permutation sorting t, by counting inversions
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| t[i] > t[j])
            .count();
        let i1 = missing + 1;
        let exponent = n + 1 + i1 + inversions;
        let c = if exponent.is_multiple_of(2) { 1 } else { -1 };
        a.add_to_product(&t, S::from_int(c), missing)?;
    }
    a.set_metadata(format!("recipe=vn; n={n}"));
    Ok(a)
}

/// `[e_i, e_1, …, e_{n−1}] = α_i e_i` for `i = 1..m`, all other products zero.
///
/// Requires `m ≥ n − 1`, every `α_i ≠ 0` and `α_1 + … + α_{n−1} = 0`.
pub fn build_invertible_example<S: Scalar>(alphas: &[S], n: usize) -> Result<NAryAlgebra<S>> {
    if n < 2 {
        return Err(Error::Precondition(format!("arity must be >= 2, got {n}")));
    }
    let m = alphas.len();
    if m < n - 1 {
        return Err(Error::Precondition(format!(
            "need at least n-1 = {} coefficients, got {m}",
            n - 1
        )));
    }
    if alphas.iter().any(|a| a.is_zero()) {
        return Err(Error::Precondition("every alpha must be nonzero".into()));
    }
    let mut head = S::zero();
    for a in &alphas[..n - 1] {
        head += a;
    }
    if !head.is_zero() {
        return Err(Error::Precondition(format!(
            "alpha_1 + ... + alpha_{} = {head}, must be 0",
            n - 1
        )));
    }
    let names = (1..=m).map(|i| format!("e{i}")).collect();
    let mut alg = NAryAlgebra::new(format!("inv{n}"), n, names)?;
    for (i, a) in alphas.iter().enumerate() {
        let mut t = vec![i];
        t.extend(0..n - 1);
        alg.add_to_product(&t, a.clone(), i)?;
    }
    let shown: Vec<String> = alphas.iter().map(ToString::to_string).collect();
    alg.set_metadata(format!(
        "recipe=invertible; n={n}; alphas={}",
        shown.join(",")
    ));
    Ok(alg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_fundamental_identity, check_skew};
    use crate::Rational;

    fn q(k: i64) -> Rational {
        Rational::from_int(k)
    }

    #[test]
    fn sl2_is_lie() {
        let s = build_sl2::<Rational>();
        assert_eq!(s.basis_bracket(&[1, 0]), vec![q(2), q(0), q(0)]);
        assert!(check_fundamental_identity(&s).holds);
        assert!(check_skew(&s).holds);
    }

    #[test]
    fn small_lie_fixtures() {
        for a in [build_heisenberg::<Rational>(), build_solvable_2d()] {
            assert!(check_fundamental_identity(&a).holds);
            assert!(check_skew(&a).holds);
        }
        assert!(check_fundamental_identity(&build_l2::<Rational>()).holds);
    }

    #[test]
    fn vn_generator_signs() {
        let v3 = build_vn::<Rational>(3).unwrap();
        assert_eq!(v3.dim(), 4);
        // [e2,e3,e4] = (−1)^{3+1+1} e1 = −e1
        assert_eq!(v3.basis_bracket(&[1, 2, 3]), vec![q(-1), q(0), q(0), q(0)]);
        // [e1,e2,e3] = (−1)^{3+1+4} e4 = e4
        assert_eq!(v3.basis_bracket(&[0, 1, 2]), vec![q(0), q(0), q(0), q(1)]);
        for n in 2..=4 {
            let v = build_vn::<Rational>(n).unwrap();
            assert!(check_fundamental_identity(&v).holds, "V_{n}");
            assert!(check_skew(&v).holds, "V_{n}");
        }
        assert!(build_vn::<Rational>(1).is_err());
    }

    #[test]
    fn invertible_example_constraints() {
        let a = build_invertible_example(&[q(1), q(-1), q(5)], 3).unwrap();
        assert!(check_fundamental_identity(&a).holds);
        assert!(build_invertible_example(&[q(1), q(-2), q(5)], 3).is_err());
        assert!(build_invertible_example(&[q(1), q(-1), q(0)], 3).is_err());
        assert!(build_invertible_example(&[q(1)], 3).is_err());
    }
}
