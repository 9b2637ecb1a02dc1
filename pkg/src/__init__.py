"""
RIS Copula Outage Toolkit

Outage probability of RIS-assisted links under b-bit phase quantization.
Supports channel simulation, exact one-bit marginals, FGM copula models,
Fox-H closed forms and moment-matched Gamma approximations.
"""

__version__ = "1.0.0"
__author__ = "RIS Copula Toolkit Team"
