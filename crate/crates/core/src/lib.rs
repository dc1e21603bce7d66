pub mod hyp;
