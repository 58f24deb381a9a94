"""
Core utilities and configuration
"""
