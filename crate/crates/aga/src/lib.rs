//! File formats, the example registry, parallel sweeps and the command line
//! for the exact A-graded algebra library.

pub mod cli;
pub mod io;
pub mod registry;
pub mod scan;
pub mod table1;
