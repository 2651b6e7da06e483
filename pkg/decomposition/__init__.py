# decomposition -- isotypic g_0-decomposition of g_1, triangular decomposition and isotropy.
