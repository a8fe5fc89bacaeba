"""
Configuration modules read through torichms.support.Config
"""
