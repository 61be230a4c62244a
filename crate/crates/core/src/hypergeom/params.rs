use serde::{Deserialize, Serialize};

use crate::exact::Rational;
use crate::{Error, Result};

/// The parameter block `Δ(k, c) = c/k, (c+1)/k, …, (c+k−1)/k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamSet {
    values: Vec<Rational>,
}

impl ParamSet {
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn into_vec(self) -> Vec<Rational> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `Δ(0, c)`: the empty block.
    pub fn empty() -> Self {
        ParamSet { values: Vec::new() }
    }
}

impl IntoIterator for ParamSet {
    type Item = Rational;
    type IntoIter = std::vec::IntoIter<Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.values.into_iter()
    }
}

pub fn param_set(k: i64, c: &Rational) -> Result<ParamSet> {
    if k <= 0 {
        return Err(Error::domain(format!("parameter block size must be positive, got {k}")));
    }
    let values = (0..k).map(|i| (c + i) / k).collect();
    Ok(ParamSet { values })
}
