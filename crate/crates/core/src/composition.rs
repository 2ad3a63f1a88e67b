use alloc::vec::Vec;

use crate::error::Error;

/// A weak composition `s = (s(1), ..., s(n))` of non-negative integers,
/// the signature indexing every object in this crate. Labels are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeakComposition {
    entries: Vec<u32>,
}

impl WeakComposition {
    /// Rejects the empty sequence; `n = 1` is allowed.
    pub fn new(entries: Vec<u32>) -> Result<Self, Error> {
        if entries.is_empty() {
            return Err(Error::EmptySignature);
        }
        Ok(WeakComposition { entries })
    }

    pub fn length(&self) -> usize {
        self.entries.len()
    }

    /// Sum of all entries.
    pub fn weight(&self) -> u32 {
        self.entries.iter().sum()
    }

    /// Entry `s(label)` for a 1-based label.
    pub fn get(&self, label: usize) -> u32 {
        self.entries[label - 1]
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// True when no entry is zero, i.e. `s` is a composition.
    pub fn is_composition(&self) -> bool {
        self.entries.iter().all(|&e| e > 0)
    }

    /// True when the congruence and quotient machinery applies: no zero
    /// entry after the first position (the first entry never influences
    /// inversions), or the trivial all-zero signature.
    pub fn supports_quotient(&self) -> bool {
        self.entries[1..].iter().all(|&e| e > 0) || self.entries.iter().all(|&e| e == 0)
    }

    pub fn reversed(&self) -> Self {
        let mut entries = self.entries.clone();
        entries.reverse();
        WeakComposition { entries }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn weight_and_length() {
        let s = WeakComposition::new(vec![2, 0, 3, 4, 0, 1]).unwrap();
        assert_eq!(s.length(), 6);
        assert_eq!(s.weight(), 10);
    }

    #[test]
    fn empty_rejected_single_allowed() {
        assert_eq!(WeakComposition::new(vec![]), Err(Error::EmptySignature));
        assert!(WeakComposition::new(vec![0]).is_ok());
    }

    #[test]
    fn quotient_gate() {
        let ok = |v: Vec<u32>| WeakComposition::new(v).unwrap().supports_quotient();
        assert!(ok(vec![1, 1, 1]));
        assert!(ok(vec![0, 2, 2]));
        assert!(ok(vec![0, 0, 0]));
        assert!(!ok(vec![0, 0, 1]));
        assert!(!ok(vec![1, 0, 2]));
    }
}
