use super::masks::{permutations, PairIndex};
use super::{check_cap, ExplorerError};
use crate::params::{compute, ParameterKind};

/// Values of the nine stable parameters for every graph on `[n]`, indexed
/// by edge mask.
///
/// Parameters are isomorphism invariants, so each value is computed once
/// per isomorphism class and copied along the orbit of the class under all
/// `n!` relabelings.
#[derive(Debug, Clone)]
pub struct ValueTable {
    index: PairIndex,
    values: Vec<[u8; 9]>,
}

impl ValueTable {
    pub const CAP: usize = 7;
    /// Marks an undefined value (edge cover with an isolated vertex).
    pub const UNDEFINED: u8 = u8::MAX;

    pub fn build(n: usize) -> Result<Self, ExplorerError> {
        check_cap(n, Self::CAP)?;
        let index = PairIndex::new(n);
        let total = 1usize << index.pair_count();
        let maps: Vec<Vec<u8>> = permutations(n).iter().map(|p| index.pair_map(p)).collect();
        let mut values = vec![[0u8; 9]; total];
        let mut done = vec![false; total];
        for mask in 0..total {
            if done[mask] {
                continue;
            }
            let vals = Self::evaluate(&index, mask as u64);
            for map in &maps {
                let image = PairIndex::permute(map, mask as u64) as usize;
                if !done[image] {
                    done[image] = true;
                    values[image] = vals;
                }
            }
        }
        Ok(ValueTable { index, values })
    }

    fn evaluate(index: &PairIndex, mask: u64) -> [u8; 9] {
        let g = index.to_graph(mask);
        ParameterKind::STABLE.map(|kind| match compute(kind, &g) {
            Ok(v) => v as u8,
            Err(_) => Self::UNDEFINED,
        })
    }

    pub fn order(&self) -> usize {
        self.index.order()
    }

    pub fn pair_index(&self) -> &PairIndex {
        &self.index
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// All nine values in [`ParameterKind::STABLE`] order.
    #[inline]
    pub fn row(&self, mask: u64) -> &[u8; 9] {
        &self.values[mask as usize]
    }

    pub fn get(&self, mask: u64, kind: ParameterKind) -> Option<usize> {
        let slot = stable_slot(kind)?;
        let v = self.values[mask as usize][slot];
        (v != Self::UNDEFINED).then_some(v as usize)
    }
}

pub(crate) fn stable_slot(kind: ParameterKind) -> Option<usize> {
    ParameterKind::STABLE.iter().position(|&k| k == kind)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_values_match_direct_computation() {
        let table = ValueTable::build(5).unwrap();
        let idx = table.pair_index();
        for mask in 0..table.len() as u64 {
            let g = idx.to_graph(mask);
            for kind in ParameterKind::STABLE {
                assert_eq!(
                    table.get(mask, kind),
                    compute(kind, &g).ok(),
                    "{kind} on {g:?}"
                );
            }
        }
    }

    #[test]
    fn cap() {
        assert!(ValueTable::build(8).is_err());
    }
}
