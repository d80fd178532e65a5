"""The twelve named separation queries and the theorem each must return."""

SEPARATION_PAIRS = [
    ("inaccessible-degree ladder", "t-inaccessible(t)", "t-inaccessible(t+1)",
     "Degrees of inaccessible cardinals, Theorem: change one t-inaccessible degree",
     "still $t$-inaccessible, but not $(t+1)$-inaccessible"),
    ("weakly inaccessible", "weakly-inaccessible", "inaccessible",
     "Degrees of inaccessible cardinals, Theorem: distinguish inaccessible from weakly inaccessible",
     "every ground model weakly inaccessible cardinal is still weakly inaccessible"),
    ("Mahlo-degree ladder", "t-mahlo($t)", "t-mahlo($t+1)",
     "Mahlo cardinals, Theorem: change one t-Mahlo degree",
     "$\\kappa$ is $t$-Mahlo, but not $(t+1)$-Mahlo"),
    ("Mahlo vs all inaccessible degrees", "t-inaccessible(*)", "mahlo",
     "Mahlo cardinals, Theorem: distinguish Mahlo and all inaccessible degrees",
     "where $\\kappa$ is not Mahlo"),
    ("weakly compact vs all t-Mahlo", "t-mahlo(*)", "weakly-compact",
     "Weakly compact cardinals and beyond, Theorem: distinguish weakly compact and all Mahlo degrees",
     "the cardinal $\\kappa$ is $t$-Mahlo but not weakly compact"),
    ("weakly measurable vs measurable", "weakly-measurable", "measurable",
     "Weakly compact cardinals and beyond, Theorem (Schanker)",
     "the measurability of $\\kappa$ can be destroyed while preserving that it is weakly measurable"),
    ("strongly Ramsey vs ineffable", "strongly-ramsey", "ineffable",
     "Weakly compact cardinals and beyond, Theorem: slim Kurepa tree forcing",
     "is not ineffable, but it is still strongly Ramsey"),
    ("theta-supercompact threshold", "lt-theta-supercompact($theta)", "theta-supercompact($theta)",
     "Supercompact and strongly compact cardinals, Theorem: kill supercompact softly",
     "$\\kappa$ is $<\\theta$-supercompact, but not $\\theta$-supercompact, and indeed not even "
     "$\\theta$-strongly compact"),
    ("strongly compact vs supercompact", "strongly-compact", "supercompact",
     "Supercompact and strongly compact cardinals, Theorem (Magidor)",
     "strongly compact, but not supercompact"),
    ("huge vs superhuge", "huge", "superhuge",
     "Supercompact and strongly compact cardinals, Theorem: huge but not superhuge",
     "still huge with target $\\lambda$, but $\\kappa$ is not superhuge"),
    ("worldly vs Sigma_n-worldly", "sigma-n-worldly($n)", "worldly",
     "Mahlo cardinals, Theorem (Hamkins)",
     "not worldly, but still $\\Sigma_n$-worldly"),
    ("Sigma_1 vs Sigma_2 reflecting", "sigma-n-reflecting(1)", "sigma-n-reflecting(2)",
     "Mahlo cardinals, Theorem: Sigma_1 but not Sigma_2 reflecting",
     "still $\\Sigma_1$-reflecting, but not $\\Sigma_2$-reflecting"),
]
