from cog_hierarchy import __version__
