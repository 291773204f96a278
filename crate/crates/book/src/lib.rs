//! Compiles the guide in `book/src` as rustdoc so `cargo test` runs every
//! code listing in it. One module per chapter keeps failures traceable.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/forms.md")]
pub mod forms {}
#[doc = include_str!("../../../book/src/successors.md")]
pub mod successors {}
#[doc = include_str!("../../../book/src/descent.md")]
pub mod descent {}
#[doc = include_str!("../../../book/src/tree.md")]
pub mod tree {}
#[doc = include_str!("../../../book/src/oracle.md")]
pub mod oracle {}
#[doc = include_str!("../../../book/src/residues.md")]
pub mod residues {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
