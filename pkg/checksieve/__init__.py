import importlib.metadata
try:
    __version__ = importlib.metadata.version('checksieve')
except importlib.metadata.PackageNotFoundError:
    __version__ = "0+unknown"
