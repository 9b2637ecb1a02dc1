"""
RIS Copula Outage Toolkit - Test Suite
"""
