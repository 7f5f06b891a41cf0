use crate::PartitionError;

/// The arithmetic progression `start, start + step, start + 2·step, …`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Progression {
    pub start: u64,
    pub step: u64,
}

/// A set of allowed part sizes: explicit values plus arithmetic progressions,
/// the latter materialised only up to the truncation order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PartsSpec {
    explicit: Vec<u64>,
    progressions: Vec<Progression>,
}

impl PartsSpec {
    /// A finite list of parts.
    pub fn explicit(parts: &[u64]) -> Result<Self, PartitionError> {
        Self::new(parts, &[])
    }

    /// A union of progressions given as `(start, step)` pairs.
    pub fn progressions(progs: &[(u64, u64)]) -> Result<Self, PartitionError> {
        Self::new(&[], progs)
    }

    /// Explicit parts together with progressions. Parts must be positive and
    /// distinct; overlaps between progressions are detected when the set is
    /// materialised.
    pub fn new(parts: &[u64], progs: &[(u64, u64)]) -> Result<Self, PartitionError> {
        if parts.contains(&0) || progs.iter().any(|&(a, m)| a == 0 || m == 0) {
            return Err(PartitionError::ZeroPart);
        }
        let spec = Self {
            explicit: parts.to_vec(),
            progressions: progs.iter().map(|&(start, step)| Progression { start, step }).collect(),
        };
        // Materialising to the largest explicit part catches explicit
        // duplicates and explicit/progression collisions early.
        let probe = spec.explicit.iter().copied().max().unwrap_or(0);
        spec.materialize(probe as usize)?;
        Ok(spec)
    }

    /// Sorted list of all parts `≤ order`.
    pub fn materialize(&self, order: usize) -> Result<Vec<u64>, PartitionError> {
        let mut all: Vec<u64> = self.explicit.iter().copied().filter(|&p| p as usize <= order).collect();
        for prog in &self.progressions {
            let mut v = prog.start;
            while v as usize <= order {
                all.push(v);
                v += prog.step;
            }
        }
        all.sort_unstable();
        if let Some(w) = all.windows(2).find(|w| w[0] == w[1]) {
            return Err(PartitionError::DuplicatePart(w[0]));
        }
        Ok(all)
    }
}
