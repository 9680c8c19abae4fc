from django.apps import AppConfig


class NumtheoryConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "numtheory"
    verbose_name = "Teoria dos números"
