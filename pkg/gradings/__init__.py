# gradings -- torus gradings, sigma-twisted Weyl data and the indecomposability screen.
