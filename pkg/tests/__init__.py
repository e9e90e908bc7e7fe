"""Test package for gorfro."""
