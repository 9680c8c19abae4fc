from django.apps import AppConfig


class DeformedConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "deformed"
    verbose_name = "Sistema deformado por lambdas"
