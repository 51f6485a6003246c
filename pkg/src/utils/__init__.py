"""Utility functions for the solver"""
