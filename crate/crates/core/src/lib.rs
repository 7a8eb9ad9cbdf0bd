pub mod cli;
pub mod conjugacy;
pub mod element;
pub mod error;
pub mod invariants;
pub mod oracle;
pub mod periodic;
pub mod presentation;
pub mod roots;

pub use conjugacy::{Arrow, Conjugacy, ConjugacyGraph};
pub use element::{GarsideElement, Letter, Word};
pub use error::{Error, Result};
pub use invariants::{AbelianGroup, FreeLetter, GmmImage};
pub use periodic::{Center, PeriodicWitness, Periodicity};
pub use presentation::{Factor, PairProduct, Presentation, Simple};
pub use roots::{Move, RootsVerdict};
