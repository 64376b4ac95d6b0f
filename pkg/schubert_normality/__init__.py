"""Schubert normality - decide normality of Schubert varieties and local models."""

__version__ = "1.0.0"
