import os

import django

# Mirror manage.py so the engine tests run under pytest as well as
# `python manage.py test engine`.
os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'cantorkit.settings')
django.setup()
