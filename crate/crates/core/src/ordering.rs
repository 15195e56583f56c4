//! Sorting of node values, duplicate screening and the sorted-gap bound.
//!
//! Node values of a non-monotone function are not ordered by index, so the
//! level-axis bases are built on the sorted values instead. Equal values are
//! collapsed into one equivalence class whose representative is the least
//! original index; every member of a class shares the representative's base
//! function.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SortedOrder {
    perm: Vec<usize>,
    sorted_values: Vec<f64>,
    classes: Vec<Vec<usize>>,
    reps: Vec<usize>,
    strict_values: Vec<f64>,
    class_of: Vec<usize>,
}

/// Stable sort of `values` followed by screening of exact duplicates.
pub fn sort_and_screen(values: &[f64]) -> Result<SortedOrder> {
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    if let Some((i, &v)) = values.iter().enumerate().find(|(_, v)| !v.is_finite()) {
        return Err(Error::NonFinite { x: i as f64, value: v });
    }

    let mut perm: Vec<usize> = (0..values.len()).collect();
    // Ties keep index order, so the first member of each run is the least index.
    perm.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap().then(a.cmp(&b)));
    let sorted_values: Vec<f64> = perm.iter().map(|&k| values[k]).collect();

    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut strict_values = Vec::new();
    let mut class_of = vec![0; values.len()];
    for (&k, &v) in perm.iter().zip(&sorted_values) {
        match strict_values.last() {
            Some(&last) if last == v => {
                classes.last_mut().unwrap().push(k);
            }
            _ => {
                strict_values.push(v);
                classes.push(vec![k]);
            }
        }
        class_of[k] = classes.len() - 1;
    }
    let reps = classes.iter().map(|c| c[0]).collect();

    Ok(SortedOrder { perm, sorted_values, classes, reps, strict_values, class_of })
}

impl SortedOrder {
    /// `perm[t]` is the original index holding the `t`-th smallest value.
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn sorted_values(&self) -> &[f64] {
        &self.sorted_values
    }

    /// Equivalence classes in ascending value order.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// Least original index of each class.
    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    /// The distinct values, strictly increasing.
    pub fn strict_values(&self) -> &[f64] {
        &self.strict_values
    }

    /// Position in `strict_values` of the class holding original index `i`.
    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn class_map(&self) -> &[usize] {
        &self.class_of
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    /// Gap below each index's class, `strict[c] - strict[c-1]`, stored at the
    /// original index. Members of a class share its gap; the lowest class
    /// borrows the gap of the next one.
    pub fn sorted_gaps(&self) -> Vec<f64> {
        let s = &self.strict_values;
        let gap = |c: usize| match (c, s.len()) {
            (_, 0 | 1) => 0.0,
            (0, _) => s[1] - s[0],
            (c, _) => s[c] - s[c - 1],
        };
        self.class_of.iter().map(|&c| gap(c)).collect()
    }
}

/// Largest sorted gap `d` against largest adjacent jump `e` in original order.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GapReport {
    pub d: f64,
    pub e: f64,
}

impl GapReport {
    pub fn holds(&self) -> bool {
        self.d <= self.e
    }

    pub fn margin(&self) -> f64 {
        self.e - self.d
    }
}

pub fn gap_report(values: &[f64]) -> Result<GapReport> {
    if values.len() < 2 {
        return Err(Error::TooFewValues { needed: 2, got: values.len() });
    }
    let order = sort_and_screen(values)?;
    let d = order
        .sorted_values
        .windows(2)
        .map(|w| w[1] - w[0])
        .fold(0.0, f64::max);
    let e = values.windows(2).map(|w| (w[1] - w[0]).abs()).fold(0.0, f64::max);
    Ok(GapReport { d, e })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicates_form_one_class() {
        let s = sort_and_screen(&[0.0, 1.0, 1.0, 2.0]).unwrap();
        assert_eq!(s.perm(), &[0, 1, 2, 3]);
        assert_eq!(s.classes(), &[vec![0], vec![1, 2], vec![3]]);
        assert_eq!(s.reps(), &[0, 1, 3]);
        assert_eq!(s.strict_values(), &[0.0, 1.0, 2.0]);
        assert_eq!(s.class_of(2), 1);
    }

    #[test]
    fn plain_sort() {
        let s = sort_and_screen(&[3.0, 1.0, 2.0]).unwrap();
        assert_eq!(s.perm(), &[1, 2, 0]);
        assert_eq!(s.strict_values(), &[1.0, 2.0, 3.0]);
    }

    #[test]
    fn all_equal() {
        let s = sort_and_screen(&[5.0, 5.0, 5.0]).unwrap();
        assert_eq!(s.classes().len(), 1);
        assert_eq!(s.reps(), &[0]);
        assert_eq!(s.strict_values(), &[5.0]);
    }

    #[test]
    fn representative_is_least_index_when_duplicates_are_out_of_order() {
        let s = sort_and_screen(&[2.0, 1.0, 2.0, 1.0, 0.0]).unwrap();
        assert_eq!(s.perm(), &[4, 1, 3, 0, 2]);
        assert_eq!(s.reps(), &[4, 1, 0]);
        assert_eq!(s.classes()[2], vec![0, 2]);
    }

    #[test]
    fn signed_zeros_are_equal() {
        let s = sort_and_screen(&[0.0, -0.0, 1.0]).unwrap();
        assert_eq!(s.classes()[0], vec![0, 1]);
        assert_eq!(s.reps()[0], 0);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(sort_and_screen(&[]), Err(Error::EmptyInput));
        assert!(matches!(sort_and_screen(&[1.0, f64::NAN]), Err(Error::NonFinite { .. })));
        assert!(matches!(gap_report(&[1.0]), Err(Error::TooFewValues { .. })));
    }

    #[test]
    fn gap_examples() {
        // hand enumeration: sorted (1,2,3) gaps 1,1; jumps |1-3|=2, |2-1|=1
        assert_eq!(gap_report(&[3.0, 1.0, 2.0]).unwrap(), GapReport { d: 1.0, e: 2.0 });
        assert_eq!(gap_report(&[1.0, 2.0, 4.0]).unwrap(), GapReport { d: 2.0, e: 2.0 });
        // sorted (0,5,10) gaps 5,5; jumps 10, 5
        assert_eq!(gap_report(&[0.0, 10.0, 5.0]).unwrap(), GapReport { d: 5.0, e: 10.0 });
    }

    #[test]
    fn sorted_gaps_borrow_for_first() {
        let s = sort_and_screen(&[3.0, 1.0, 2.0]).unwrap();
        // sorted indices 1,2,0 with values 1,2,3
        assert_eq!(s.sorted_gaps(), vec![1.0, 1.0, 1.0]);
        let s = sort_and_screen(&[0.0, 0.25, 0.0]).unwrap();
        assert_eq!(s.sorted_gaps(), vec![0.25, 0.25, 0.25]);
        let s = sort_and_screen(&[0.0, 1.0, 1.0, 3.0]).unwrap();
        assert_eq!(s.sorted_gaps(), vec![1.0, 1.0, 1.0, 2.0]);
    }
}
