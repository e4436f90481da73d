//! Batch front end for `jacklab-core`: cached coefficient and Jack tables,
//! JSON/CSV export, censuses with witnesses, and the verification suites.

pub mod app;
pub mod cache;
pub mod census;
pub mod formats;
pub mod verify;
