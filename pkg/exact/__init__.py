# exact -- rational scalars, phases and dense linear algebra over Q.
