use super::polynomial::UnivariatePolynomial;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Polynomial in positive integer `t` whose coefficients are periodic:
/// the piece used at `t` is `pieces[t mod period]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiPolynomial<T> {
    pieces: Vec<UnivariatePolynomial<T>>,
}

impl<T: Scalar> QuasiPolynomial<T> {
    pub fn new(pieces: Vec<UnivariatePolynomial<T>>) -> Result<Self> {
        if pieces.is_empty() {
            return Err(Error::Input("quasi-polynomial needs at least one piece".into()));
        }
        Ok(Self { pieces })
    }

    pub fn period(&self) -> usize {
        self.pieces.len()
    }

    pub fn pieces(&self) -> &[UnivariatePolynomial<T>] {
        &self.pieces
    }

    pub fn piece(&self, residue: usize) -> &UnivariatePolynomial<T> {
        &self.pieces[residue % self.pieces.len()]
    }

    /// `Some` when the period is 1.
    pub fn as_polynomial(&self) -> Option<&UnivariatePolynomial<T>> {
        (self.pieces.len() == 1).then(|| &self.pieces[0])
    }

    pub fn eval(&self, t: u64) -> T {
        let x = T::from_u64(t).expect("scalar cannot hold t");
        self.piece((t % self.period() as u64) as usize).eval(&x)
    }
}

/// Polynomial pieces on a partition of `(lo, hi]`.
///
/// `breakpoints = [b_0 = lo, b_1, ..., b_k = hi]`. `open_pieces[i]` holds on
/// the open interval `(b_i, b_{i+1})` and `point_pieces[i]` gives the value at
/// the right endpoint `b_{i+1}`. Point values are kept separately because
/// lattice-point domains may jump on either side of a breakpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiecewisePolynomial<T> {
    breakpoints: Vec<T>,
    open_pieces: Vec<UnivariatePolynomial<T>>,
    point_pieces: Vec<UnivariatePolynomial<T>>,
}

impl<T: Scalar + PartialOrd> PiecewisePolynomial<T> {
    pub fn new(
        breakpoints: Vec<T>,
        open_pieces: Vec<UnivariatePolynomial<T>>,
        point_pieces: Vec<UnivariatePolynomial<T>>,
    ) -> Result<Self> {
        if breakpoints.len() < 2 {
            return Err(Error::Input("need at least two breakpoints".into()));
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Input("breakpoints must be strictly increasing".into()));
        }
        let k = breakpoints.len() - 1;
        if open_pieces.len() != k || point_pieces.len() != k {
            return Err(Error::Input("one open and one point piece per subinterval".into()));
        }
        Ok(Self {
            breakpoints,
            open_pieces,
            point_pieces,
        })
    }

    pub fn breakpoints(&self) -> &[T] {
        &self.breakpoints
    }

    pub fn open_pieces(&self) -> &[UnivariatePolynomial<T>] {
        &self.open_pieces
    }

    pub fn point_pieces(&self) -> &[UnivariatePolynomial<T>] {
        &self.point_pieces
    }

    /// `None` outside `(lo, hi]`.
    pub fn eval(&self, t: &T) -> Option<T> {
        self.polynomial_at(t).map(|p| p.eval(t))
    }

    /// The polynomial in force at `t`, `None` outside `(lo, hi]`.
    pub fn polynomial_at(&self, t: &T) -> Option<&UnivariatePolynomial<T>> {
        let lo = &self.breakpoints[0];
        let hi = self.breakpoints.last().expect("non-empty");
        if t <= lo || t > hi {
            return None;
        }
        for i in 0..self.open_pieces.len() {
            let right = &self.breakpoints[i + 1];
            if t < right {
                return Some(&self.open_pieces[i]);
            }
            if t == right {
                return Some(&self.point_pieces[i]);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};
    use crate::Polynomial;

    #[test]
    fn quasi_polynomial_uses_residue_piece() {
        let q = QuasiPolynomial::new(vec![
            Polynomial::new(vec![int(1), int(1)]),
            Polynomial::new(vec![int(0), int(2)]),
        ])
        .unwrap();
        assert_eq!(q.period(), 2);
        assert_eq!(q.eval(4), int(5));
        assert_eq!(q.eval(3), int(6));
        assert!(q.as_polynomial().is_none());
        assert!(QuasiPolynomial::<num_rational::BigRational>::new(vec![]).is_err());
    }

    #[test]
    fn piecewise_evaluation_respects_breakpoints() {
        let pw = PiecewisePolynomial::new(
            vec![int(0), int(1), int(2)],
            vec![Polynomial::constant(int(1)), Polynomial::constant(int(3))],
            vec![Polynomial::constant(int(2)), Polynomial::constant(int(4))],
        )
        .unwrap();
        assert_eq!(pw.eval(&int(0)), None);
        assert_eq!(pw.eval(&rat(1, 2)), Some(int(1)));
        assert_eq!(pw.eval(&int(1)), Some(int(2)));
        assert_eq!(pw.eval(&rat(3, 2)), Some(int(3)));
        assert_eq!(pw.eval(&int(2)), Some(int(4)));
        assert_eq!(pw.eval(&rat(5, 2)), None);
        assert!(PiecewisePolynomial::new(
            vec![int(1), int(1)],
            vec![Polynomial::zero()],
            vec![Polynomial::zero()]
        )
        .is_err());
    }
}
