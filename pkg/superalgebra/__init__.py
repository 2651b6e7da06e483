# superalgebra -- the LieSuperalgebra value type, its constructors and axiom checks.
