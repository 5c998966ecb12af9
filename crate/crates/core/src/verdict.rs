//! Small shared vocabulary for checks that sweep a parameter range and
//! report the first counterexample, if any.

/// First failing parameter value of a congruence family, with both sides
/// reduced into the working modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CongruenceFailure {
    /// Value of the running parameter (`l`, `m`, `n`, ... depending on the check).
    pub param: u64,
    pub lhs: u64,
    pub rhs: u64,
}

/// Outcome of sweeping one congruence family over its parameter range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RangeOutcome {
    /// How many parameter values were checked.
    pub checked: u64,
    /// The first failure, when one exists.
    pub failure: Option<CongruenceFailure>,
}

impl RangeOutcome {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }

    pub(crate) fn sweep<I>(params: I, mut sides: impl FnMut(u64) -> (u64, u64)) -> Self
    where
        I: IntoIterator<Item = u64>,
    {
        let mut checked = 0;
        for param in params {
            checked += 1;
            let (lhs, rhs) = sides(param);
            if lhs != rhs {
                return Self {
                    checked,
                    failure: Some(CongruenceFailure { param, lhs, rhs }),
                };
            }
        }
        Self {
            checked,
            failure: None,
        }
    }
}
