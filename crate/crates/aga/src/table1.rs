//! Classification of all quadruples `1 <= a_1 < ... < a_4 <= 9`, in parallel.

use aga_core::coherence::{classify, table1_quadruples, Classification};
use aga_core::error::Result;
use aga_core::grading::GradingSet;
use rayon::prelude::*;

/// Classify every quadruple on the current rayon pool; rows come back in
/// lex order whatever the thread count.
pub fn classify_all() -> Result<Vec<([u64; 4], Classification)>> {
    table1_quadruples()
        .into_par_iter()
        .map(|q| Ok((q, classify(&GradingSet::one_dim(&q)?)?)))
        .collect()
}

/// `[1347]`.
pub fn bracket(q: &[u64]) -> String {
    let digits: String = q.iter().map(u64::to_string).collect();
    format!("[{digits}]")
}

/// One TSV row: `[1347]\t27\t53\t2`.
pub fn tsv_row(q: &[u64], c: &Classification) -> String {
    format!("{}\t{}\t{}\t{}", bracket(q), c.graver, c.census, c.incoherent)
}
