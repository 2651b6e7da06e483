# formulas -- strange / very strange verifications and their companion identities.
