use std::collections::HashMap;
use std::sync::Mutex;

use super::{barnes_numbers_upto, barnes_polynomial_from_numbers, LinearForms};
use crate::{Polynomial, Rational};

/// Memo of Barnes numbers keyed by the linear-form vector.
///
/// Each entry keeps `B_0(a)..=B_K(a)` for the largest `K` requested so far.
/// Safe to share between threads.
#[derive(Debug, Default)]
pub struct BarnesCache {
    numbers: Mutex<HashMap<Vec<Rational>, Vec<Rational>>>,
}

impl BarnesCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// `[B_0(a), ..., B_{k_max}(a)]`.
    pub fn numbers(&self, k_max: usize, a: &LinearForms<Rational>) -> Vec<Rational> {
        {
            let map = self.numbers.lock().expect("barnes cache poisoned");
            if let Some(v) = map.get(a.entries()) {
                if v.len() > k_max {
                    return v[..=k_max].to_vec();
                }
            }
        }
        let fresh = barnes_numbers_upto(k_max, a);
        let mut map = self.numbers.lock().expect("barnes cache poisoned");
        let slot = map.entry(a.entries().to_vec()).or_default();
        if slot.len() < fresh.len() {
            *slot = fresh.clone();
        }
        fresh
    }

    pub fn number(&self, k: usize, a: &LinearForms<Rational>) -> Rational {
        self.numbers(k, a).swap_remove(k)
    }

    pub fn polynomial(&self, k: usize, a: &LinearForms<Rational>) -> Polynomial {
        barnes_polynomial_from_numbers(k, &self.numbers(k, a))
    }

    pub fn len(&self) -> usize {
        self.numbers.lock().expect("barnes cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
