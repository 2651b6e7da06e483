# cli -- RunConfig, the algebra catalog, command handlers and the batch sweep.
