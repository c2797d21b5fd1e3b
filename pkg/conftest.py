import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "c1_fusion.settings")
django.setup()
