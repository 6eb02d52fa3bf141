import os.path
import re

from setuptools import setup

SETUP_DIR = os.path.dirname(os.path.abspath(__file__))

# Get package version from sampledeval/__init__.py
with open(os.path.join(SETUP_DIR, "sampledeval", "__init__.py")) as f:
    VERSION = re.search(r'__version__ = "(.*?)"', f.read()).group(1)

# Get dependencies from requirements.txt
with open(os.path.join(SETUP_DIR, "requirements.txt"), "r") as f:
    REQUIRED_PACKAGES = f.read().splitlines()


setup(
    name="sampledeval",
    version=VERSION,
    description="Ranking metrics under sampled evaluation.",
    license="MIT",
    include_package_data=True,
    packages=["sampledeval", "sampledeval.framework", "sampledeval.scripts"],
    install_requires=REQUIRED_PACKAGES,
    entry_points={
        "console_scripts": [
            "sampled_eval=sampledeval.scripts.sampled_eval:main",
        ]
    },
    package_data={"sampledeval": ["data/*"]},
    zip_safe=False,
)
