"""Package version information sourced from setuptools_scm."""

try:
    from ._version import version as __version__
except ImportError:  # pragma: no cover - editable installs before a build
    from importlib.metadata import PackageNotFoundError, version as _pkg_version

    try:
        __version__ = _pkg_version("gorfro")
    except PackageNotFoundError:
        __version__ = "0.0.0"
