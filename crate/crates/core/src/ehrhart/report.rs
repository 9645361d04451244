use std::collections::BTreeMap;
use std::fmt::Display;

use serde::Serialize;

use crate::exact::rational::format_rational;
use crate::Rational;

/// Outcome of evaluating one identity at concrete parameters.
///
/// Values are rendered as exact strings; `pass` is true iff the computed and
/// expected values are equal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub name: String,
    pub parameters: BTreeMap<String, String>,
    pub computed: String,
    pub expected: String,
    pub pass: bool,
}

impl IdentityReport {
    pub fn exact(name: &str, parameters: Params, computed: &Rational, expected: &Rational) -> Self {
        Self::compare(name, parameters, computed, expected, format_rational)
    }

    /// Equality of any displayable values.
    pub fn compare<T: PartialEq>(
        name: &str,
        parameters: Params,
        computed: &T,
        expected: &T,
        show: impl Fn(&T) -> String,
    ) -> Self {
        Self {
            name: name.to_string(),
            parameters: parameters.0,
            computed: show(computed),
            expected: show(expected),
            pass: computed == expected,
        }
    }
}

/// Builder for report parameters.
#[derive(Clone, Debug, Default)]
pub struct Params(BTreeMap<String, String>);

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &str, value: impl Display) -> Self {
        self.0.insert(key.to_string(), value.to_string());
        self
    }

    pub fn z(self, z: &[Rational]) -> Self {
        let s = z.iter().map(format_rational).collect::<Vec<_>>().join(",");
        self.with("z", s)
    }
}
