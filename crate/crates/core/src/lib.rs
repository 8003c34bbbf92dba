pub mod code;
pub mod constacyclic;
pub mod crt_pir;
pub mod error;
pub mod families;
pub mod par;
pub mod poly;
pub mod ring;

pub use code::{LinearCode, Search};
pub use error::{Error, Result};
pub use poly::Poly;
pub use ring::{ChainRing, Flavor, RingElement};
