use crate::error::{Error, Result};

/// The parameter triple (a, b, c) together with d = a + b - c.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamSet {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl ParamSet {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        for (name, v) in [("a", a), ("b", b), ("c", c)] {
            if !v.is_finite() {
                return Err(Error::NonFinite { name });
            }
        }
        let d = a + b - c;
        if !d.is_finite() {
            return Err(Error::NonFinite { name: "a+b-c" });
        }
        Ok(ParamSet { a, b, c, d })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// a + b - c
    pub fn d(&self) -> f64 {
        self.d
    }

    /// The set with c replaced by a + b - c, which maps one expansion onto
    /// the other.
    pub fn substituted(&self) -> ParamSet {
        ParamSet::new(self.a, self.b, self.d).expect("finite parameters stay finite")
    }

    /// The set with a and b exchanged.
    pub fn swapped(&self) -> ParamSet {
        ParamSet::new(self.b, self.a, self.c).expect("finite parameters stay finite")
    }
}

/// A parameter set together with the large parameter n.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalPoint {
    pub params: ParamSet,
    n: f64,
}

impl EvalPoint {
    pub fn new(params: ParamSet, n: f64) -> Result<Self> {
        if !n.is_finite() {
            return Err(Error::NonFinite { name: "n" });
        }
        Ok(EvalPoint { params, n })
    }

    /// Shorthand for `EvalPoint::new(ParamSet::new(a, b, c)?, n)`.
    pub fn from_parts(a: f64, b: f64, c: f64, n: f64) -> Result<Self> {
        EvalPoint::new(ParamSet::new(a, b, c)?, n)
    }

    pub fn n(&self) -> f64 {
        self.n
    }

    pub fn with_params(&self, params: ParamSet) -> EvalPoint {
        EvalPoint { params, n: self.n }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d_is_derived() {
        let p = ParamSet::new(0.7, 1.2, 0.4).unwrap();
        assert_eq!(p.d(), 0.7 + 1.2 - 0.4);
        let s = p.substituted();
        assert_eq!(s.c(), p.d());
        assert_eq!(p.swapped().a(), 1.2);
    }

    #[test]
    fn non_finite_rejected() {
        assert!(matches!(
            ParamSet::new(f64::NAN, 1.0, 1.0),
            Err(Error::NonFinite { name: "a" })
        ));
        assert!(ParamSet::new(f64::MAX, f64::MAX, -f64::MAX).is_err());
        assert!(EvalPoint::from_parts(1.0, 1.0, 1.0, f64::INFINITY).is_err());
    }
}
