//! Exact verification of the two families of lines on the Dwork pencil of
//! quintic threefolds.

pub mod exactfield;
pub mod multipoly;
pub mod numeric;
pub mod check;
pub mod dworklines;
pub mod delpezzo;
pub mod plueckerdiv;
pub mod picard;
pub mod fibers;
pub mod plot;
