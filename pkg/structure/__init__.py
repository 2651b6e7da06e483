# structure -- root data, positivity, Weyl vectors and the Casimir operator.
