"""
core-motzkin - simultaneous core partitions, rational Motzkin paths and their counts.
"""

from src.utils.init import init_application

# Initialize the application when the package is imported
init_application()
