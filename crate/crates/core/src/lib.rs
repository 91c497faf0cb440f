pub mod branching;
pub mod checks;
pub mod cli;
pub mod equivalence;
pub mod error;
pub mod rootsys;
pub mod typea;
pub mod weightpoly;
pub mod weylgrp;
