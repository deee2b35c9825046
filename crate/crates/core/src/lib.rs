pub mod cyclo;
pub mod gf;
pub mod linalg;
pub mod spectra;
pub mod suite;
pub mod triples;
pub mod unitary;
