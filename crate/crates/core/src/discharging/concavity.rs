use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

use super::Charge;

/// `f(x) = 1 − 4/x`, concave on `x > 0`.
pub fn concavity_f(x: &Charge) -> Charge {
    Charge::one() - Charge::from_integer(4.into()) / x
}

/// Minimizes `Σ f(x_i)` over `x_i ≥ a` with `Σ x_i = c`.
///
/// By concavity the minimum sits at the boundary point with all but the last
/// variable pinned at `a`.
pub fn concavity_min(a: &Charge, n: usize, c: &Charge) -> Result<(Vec<Charge>, Charge)> {
    if !a.is_positive() {
        return Err(Error::BadParams(format!("lower bound must be positive, got {a}")));
    }
    if n == 0 {
        return Err(Error::BadParams("need at least one variable".into()));
    }
    let count = Charge::from_integer((n as i64).into());
    if *c < a * &count {
        return Err(Error::Infeasible(format!("{c} < {n}·{a}")));
    }
    let last = c - a * (count - Charge::one());
    let mut xs = vec![a.clone(); n - 1];
    xs.push(last);
    let value = xs.iter().map(concavity_f).fold(Charge::zero(), |s, v| s + v);
    Ok((xs, value))
}
